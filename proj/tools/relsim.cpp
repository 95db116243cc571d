// relsim: exact classification and verification of group-invariant
// simultaneity relations on R^4.
//
// Exit codes: 0 success / all checks pass, 1 a verifier failed,
// 2 usage or I/O error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "relsim/coords.hpp"
#include "relsim/relation.hpp"
#include "relsim/verifiers.hpp"

namespace {

using namespace relsim;

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& report_path, const std::string& format) {
  SuiteConfig cfg;
  cfg.seed = seed;
  std::stringstream sel(suite);
  std::string item;
  while (std::getline(sel, item, ','))
    if (!item.empty()) cfg.selection.push_back(item);
  const std::vector<TheoremReport> reports = run_suite(cfg);
  const std::string rendered =
      format == "json" ? render_json(reports) : render_text(reports);
  if (report_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(report_path);
    if (!out) throw ParseError(report_path + ": cannot open report file for writing");
    out << rendered;
    if (!out) throw ParseError(report_path + ": write failed");
  }
  for (const TheoremReport& r : reports)
    if (!r.ok()) return 1;
  return 0;
}

int cmd_partition(const std::string& op, const std::string& events_path,
                  const std::string& rel1_path, const std::string& rel2_path) {
  EventSetPtr base = std::make_shared<EventSet>(EventSet::load_file(events_path));
  const FinitePartition r1 = load_relation_file(rel1_path, base);
  const FinitePartition r2 = load_relation_file(rel2_path, base);
  if (op == "meet") {
    write_blocks(std::cout, meet(r1, r2));
  } else if (op == "join") {
    write_blocks(std::cout, join(r1, r2));
  } else if (op == "finer") {
    std::cout << (finer_than(r1, r2) ? "true" : "false") << "\n";
  }
  return 0;
}

int cmd_transform(const std::string& element_path, const std::string& events_path) {
  const Affine4 g = load_affine_file(element_path);
  const EventSet events = EventSet::load_file(events_path);
  EventSet out;
  for (size_t i = 0; i < events.size(); ++i)
    out.add(events.id(i), apply(g, events.event(i)));
  out.write(std::cout);
  return 0;
}

int cmd_classify(const std::string& gens_text) {
  std::vector<Scalar> gens;
  std::stringstream ss(gens_text);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) gens.push_back(parse_scalar(item));
  const SubgroupClass cls = classify_subgroup(RealSubgroupSpec::generated(gens));
  std::cout << to_string(cls.kind);
  if (cls.kind == SubgroupKind::Cyclic)
    std::cout << " " << format_scalar_compact(cls.generator);
  std::cout << "\n";
  return 0;
}

int cmd_restrict(const std::string& spec_text, const std::string& events_path) {
  const RelationSpec spec = parse_relation_spec(spec_text);
  EventSetPtr base = std::make_shared<EventSet>(EventSet::load_file(events_path));
  write_blocks(std::cout, restrict_to(spec, base));
  return 0;
}

int cmd_synchrony(const std::string& what, const std::string& coords_text,
                  const std::string& dir_text) {
  const InertialCoords phi = parse_coords(coords_text);
  if (what == "speed") {
    if (dir_text.empty()) throw ParseError("synchrony speed requires --dir");
    const Vec3 n = parse_vec3(dir_text);
    std::cout << "one-way " << format_scalar(one_way_speed(phi, n)) << "\n";
    std::cout << "one-way-reverse " << format_scalar(one_way_speed(phi, -n)) << "\n";
    std::cout << "two-way " << format_scalar(two_way_speed(phi, n)) << "\n";
  } else if (what == "witness") {
    const auto v = causality_witness(phi);
    if (v)
      std::cout << "witness " << format_vec3(*v) << "\n";
    else
      std::cout << "none\n";
  } else if (what == "cone") {
    const Mat4 q = lightcone_image(phi);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j)
        std::cout << (j ? " " : "") << format_scalar_compact(q.at(i, j));
      std::cout << "\n";
    }
  }
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of group-invariant simultaneity relations"};
  app.require_subcommand(1);

  // verify
  auto* verify = app.add_subcommand("verify", "run the theorem suite");
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::string report_path;
  std::string format = "text";
  verify->add_option("--suite", suite, "all or comma-separated suite ids");
  verify->add_option("--seed", seed, "random seed for sampled instances");
  verify->add_option("--report", report_path, "write the report to this path");
  verify->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // partition
  auto* partition = app.add_subcommand("partition", "lattice operations on relations");
  std::string part_op;
  std::string events_path, rel1_path, rel2_path;
  partition->add_option("op", part_op, "meet, join or finer")
      ->required()
      ->check(CLI::IsMember({"meet", "join", "finer"}));
  partition->add_option("--events", events_path, "event file")->required();
  partition->add_option("--rel1", rel1_path, "first relation file")->required();
  partition->add_option("--rel2", rel2_path, "second relation file")->required();

  // transform
  auto* transform = app.add_subcommand("transform", "apply a group element to events");
  std::string element_path, transform_events;
  transform->add_option("--group-element", element_path, "group element file")->required();
  transform->add_option("--events", transform_events, "event file")->required();

  // classify-subgroup
  auto* classify = app.add_subcommand("classify-subgroup",
                                      "classify a finitely generated subgroup of R");
  std::string gens_text;
  classify->add_option("--gens", gens_text, "semicolon-separated scalar generators")
      ->required();

  // relation restrict
  auto* relation = app.add_subcommand("relation", "operations on relation specs");
  relation->require_subcommand(1);
  auto* restrict_cmd = relation->add_subcommand("restrict",
                                                "trace a relation spec on an event file");
  std::string spec_text, restrict_events;
  restrict_cmd->add_option("--spec", spec_text, "relation spec line")->required();
  restrict_cmd->add_option("--events", restrict_events, "event file")->required();

  // synchrony
  auto* synchrony = app.add_subcommand("synchrony", "non-standard coordinate systems");
  std::string syn_what, coords_text, dir_text;
  synchrony->add_option("what", syn_what, "speed, witness or cone")
      ->required()
      ->check(CLI::IsMember({"speed", "witness", "cone"}));
  synchrony->add_option("--coords", coords_text, "coordinate-system spec")->required();
  synchrony->add_option("--dir", dir_text, "unit direction (s1,s2,s3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*verify) return cmd_verify(suite, seed, report_path, format);
    if (*partition) return cmd_partition(part_op, events_path, rel1_path, rel2_path);
    if (*transform) return cmd_transform(element_path, transform_events);
    if (*classify) return cmd_classify(gens_text);
    if (*relation) return cmd_restrict(spec_text, restrict_events);
    if (*synchrony) return cmd_synchrony(syn_what, coords_text, dir_text);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
