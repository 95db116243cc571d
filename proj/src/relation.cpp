#include "relsim/relation.hpp"

#include <deque>
#include <map>
#include <sstream>

namespace relsim {

namespace {

void require_future_timelike(const Vec4& u, const MetricParams& m) {
  if (!is_future_timelike(u, m))
    throw PreconditionError("relation direction u must be future timelike");
}

} // namespace

RelationSpec RelationSpec::total() {
  RelationSpec s;
  s.kind = Kind::Total;
  return s;
}

RelationSpec RelationSpec::identity() {
  RelationSpec s;
  s.kind = Kind::Identity;
  return s;
}

RelationSpec RelationSpec::newton_type1(RealSubgroupSpec h) {
  RelationSpec s;
  s.kind = Kind::NewtonTypeI;
  s.subgroup = std::move(h);
  return s;
}

RelationSpec RelationSpec::newton_type2(RealSubgroupSpec h) {
  RelationSpec s;
  s.kind = Kind::NewtonTypeII;
  s.subgroup = std::move(h);
  return s;
}

RelationSpec RelationSpec::pencil_type1(Vec4 u, RealSubgroupSpec h, MetricParams m) {
  require_future_timelike(u, m);
  RelationSpec s;
  s.kind = Kind::PencilTypeI;
  s.u = std::move(u);
  s.subgroup = std::move(h);
  s.metric = std::move(m);
  return s;
}

RelationSpec RelationSpec::pencil_type2(Vec4 u, RealSubgroupSpec h, MetricParams m) {
  require_future_timelike(u, m);
  RelationSpec s;
  s.kind = Kind::PencilTypeII;
  s.u = std::move(u);
  s.subgroup = std::move(h);
  s.metric = std::move(m);
  return s;
}

RelationSpec RelationSpec::standard_sim(Vec4 u, MetricParams m) {
  require_future_timelike(u, m);
  RelationSpec s;
  s.kind = Kind::StandardSim;
  s.u = std::move(u);
  s.metric = std::move(m);
  return s;
}

RelationSpec RelationSpec::half_cone(Scalar c_hat, int sign_tag) {
  if (sign(c_hat) <= 0) throw PreconditionError("half-cone aperture must be > 0");
  if (sign_tag != 1 && sign_tag != -1)
    throw PreconditionError("half-cone sign must be +1 or -1");
  RelationSpec s;
  s.kind = Kind::HalfCone;
  s.cone_aperture = std::move(c_hat);
  s.cone_sign = sign_tag;
  return s;
}

RelationSpec RelationSpec::coset(std::vector<Affine4> gens, Event base, int word_bound) {
  if (word_bound < 0) throw PreconditionError("word bound must be >= 0");
  RelationSpec s;
  s.kind = Kind::Coset;
  s.coset_generators = std::move(gens);
  s.coset_base = std::move(base);
  s.word_bound = word_bound;
  return s;
}

namespace {

// p ~ q iff both lie on the same translated half-cone shell along the line
// o + R e4 (aperture c_hat, upper for sign +1): the apexes x4 -+ |x_bar|/c_hat
// must agree. Decided without extracting the spatial norm: with
// delta = +-c_hat (q4 - p4), the equality |q_bar| - |p_bar| = delta holds iff
// either delta = 0 and the squared norms agree, or the rational candidate
// s = (|q_bar|^2 - |p_bar|^2 - delta^2) / (2 delta) satisfies s >= 0,
// s + delta >= 0 and s^2 = |p_bar|^2.
bool half_cone_related(const RelationSpec& spec, const Event& p, const Event& q) {
  const Vec4 d = q - p;
  Scalar delta = spec.cone_aperture * d.time();
  if (spec.cone_sign < 0) delta = -delta;
  const Scalar p2 = norm2(p.x.spatial());
  const Scalar q2 = norm2(q.x.spatial());
  if (delta.is_zero()) return p2 == q2;
  const Scalar s = (q2 - p2 - delta * delta) / (Scalar(2) * delta);
  if (sign(s) < 0) return false;
  if (sign(s + delta) < 0) return false;
  return s * s == p2;
}

struct PencilDecomposition {
  Scalar along;   // coefficient of u
  Vec4 ortho;     // g-orthogonal remainder
};

PencilDecomposition pencil_decompose(const Vec4& d, const Vec4& u, const MetricParams& m) {
  const Scalar alpha = lorentz_form(d, u, m) / lorentz_form(u, u, m);
  return {alpha, d - alpha * u};
}

RelAnswer coset_related(const RelationSpec& spec, const Event& p, const Event& q) {
  if (p == q) return {true, true};
  std::vector<Affine4> maps;
  maps.reserve(spec.coset_generators.size() * 2);
  for (const Affine4& g : spec.coset_generators) {
    maps.push_back(g);
    maps.push_back(affine_inverse(g));
  }
  // Breadth-first orbit exploration from p. A hit anywhere is a definite
  // yes; a definite no needs the whole orbit explored, i.e. no new point may
  // appear past the word bound.
  std::map<Vec4, int, Vec4KeyLess> seen;
  std::deque<std::pair<Event, int>> frontier;
  seen[p.x] = 0;
  frontier.emplace_back(p, 0);
  bool overflow = false;
  while (!frontier.empty()) {
    auto [e, depth] = frontier.front();
    frontier.pop_front();
    for (const Affine4& g : maps) {
      const Event next = apply(g, e);
      if (next == q) return {true, true};
      if (seen.count(next.x)) continue;
      if (depth + 1 > spec.word_bound) {
        overflow = true;
        continue;
      }
      seen[next.x] = depth + 1;
      frontier.emplace_back(next, depth + 1);
    }
  }
  return {false, !overflow};
}

} // namespace

RelAnswer related(const RelationSpec& spec, const Event& p, const Event& q) {
  const Vec4 d = q - p;
  switch (spec.kind) {
    case RelationSpec::Kind::Total:
      return {true, true};
    case RelationSpec::Kind::Identity:
      return {p == q, true};
    case RelationSpec::Kind::NewtonTypeI:
      return {d.spatial().is_zero() && subgroup_contains(spec.subgroup, d.time()), true};
    case RelationSpec::Kind::NewtonTypeII:
      return {subgroup_contains(spec.subgroup, d.time()), true};
    case RelationSpec::Kind::PencilTypeI: {
      const auto dec = pencil_decompose(d, spec.u, *spec.metric);
      return {dec.ortho.is_zero() && subgroup_contains(spec.subgroup, dec.along), true};
    }
    case RelationSpec::Kind::PencilTypeII: {
      const auto dec = pencil_decompose(d, spec.u, *spec.metric);
      return {subgroup_contains(spec.subgroup, dec.along), true};
    }
    case RelationSpec::Kind::StandardSim:
      return {lorentz_form(d, spec.u, *spec.metric).is_zero(), true};
    case RelationSpec::Kind::HalfCone:
      return {half_cone_related(spec, p, q), true};
    case RelationSpec::Kind::Coset:
      return coset_related(spec, p, q);
  }
  throw DomainError("malformed relation spec");
}

FinitePartition restrict_to(const RelationSpec& spec, EventSetPtr x) {
  const size_t n = x->size();
  FinitePartition p(x);
  std::vector<std::vector<bool>> pairwise(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    pairwise[i][i] = true;
    for (size_t j = i + 1; j < n; ++j) {
      const RelAnswer a = related(spec, x->event(i), x->event(j));
      if (!a.decided)
        throw PreconditionError("relation undecided within word bound for pair (" +
                                x->id(i) + ", " + x->id(j) + ")");
      pairwise[i][j] = pairwise[j][i] = a.related;
      if (a.related) p.relate(i, j);
    }
  }
  // The union-find closure must add nothing: every spec is an equivalence,
  // so an intransitive trace is an implementation bug, not bad input.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (p.same(i, j) != pairwise[i][j])
        throw std::logic_error("internal invariant failure: relation trace on (" +
                               x->id(i) + ", " + x->id(j) + ") is not transitive");
  return p;
}

CausalityCheck satisfies_causality(const RelationSpec& spec, const EventSetPtr& x,
                                   const CausalKind& kind) {
  const size_t n = x->size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const RelAnswer a = related(spec, x->event(i), x->event(j));
      if (!a.decided)
        throw PreconditionError("relation undecided within word bound for pair (" +
                                x->id(i) + ", " + x->id(j) + ")");
      if (a.related && causally_connectible(x->event(i), x->event(j), kind))
        return {false, std::make_pair(x->id(i), x->id(j))};
    }
  return {};
}

namespace {

std::map<std::string, std::string> parse_keyvals(std::istringstream& ss) {
  std::map<std::string, std::string> kv;
  std::string tok;
  while (ss >> tok) {
    const size_t eq = tok.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected key=value in relation spec, got '" + tok + "'");
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  return kv;
}

const std::string& need(const std::map<std::string, std::string>& kv,
                        const std::string& key, const std::string& what) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ParseError(what + " requires " + key + "=...");
  return it->second;
}

} // namespace

RelationSpec parse_relation_spec(const std::string& text) {
  std::istringstream ss(text);
  std::string head;
  if (!(ss >> head)) throw ParseError("empty relation spec");
  if (head == "total") return RelationSpec::total();
  if (head == "identity") return RelationSpec::identity();
  const auto kv = parse_keyvals(ss);
  if (head == "newton1")
    return RelationSpec::newton_type1(parse_subgroup(need(kv, "H", head)));
  if (head == "newton2")
    return RelationSpec::newton_type2(parse_subgroup(need(kv, "H", head)));
  if (head == "pencil1" || head == "pencil2") {
    Vec4 u = parse_vec4(need(kv, "u", head));
    RealSubgroupSpec h = parse_subgroup(need(kv, "H", head));
    MetricParams m(parse_scalar(need(kv, "lambda", head)));
    return head == "pencil1" ? RelationSpec::pencil_type1(u, h, m)
                             : RelationSpec::pencil_type2(u, h, m);
  }
  if (head == "stdsim") {
    Vec4 u = parse_vec4(need(kv, "u", head));
    MetricParams m(parse_scalar(need(kv, "lambda", head)));
    return RelationSpec::standard_sim(u, m);
  }
  if (head == "halfcone") {
    const Scalar c = parse_scalar(need(kv, "c", head));
    const std::string& s = need(kv, "sign", head);
    if (s != "+" && s != "-") throw ParseError("halfcone sign must be + or -");
    return RelationSpec::half_cone(c, s == "+" ? 1 : -1);
  }
  throw ParseError("unknown relation spec '" + head + "'");
}

} // namespace relsim
