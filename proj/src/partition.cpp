#include "relsim/partition.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

namespace relsim {

FinitePartition::FinitePartition(EventSetPtr base) : base_(std::move(base)) {
  if (!base_) throw PreconditionError("partition requires a base event set");
  const size_t n = base_->size();
  parent_.resize(n);
  size_.assign(n, 1);
  min_index_.resize(n);
  for (size_t i = 0; i < n; ++i) parent_[i] = min_index_[i] = i;
}

FinitePartition FinitePartition::bottom(EventSetPtr base) {
  return FinitePartition(std::move(base));
}

FinitePartition FinitePartition::top(EventSetPtr base) {
  FinitePartition p(std::move(base));
  for (size_t i = 1; i < p.size(); ++i) p.relate(0, i);
  return p;
}

size_t FinitePartition::find(size_t i) const {
  while (parent_[i] != i) {
    parent_[i] = parent_[parent_[i]];
    i = parent_[i];
  }
  return i;
}

bool FinitePartition::same(size_t i, size_t j) const { return find(i) == find(j); }

void FinitePartition::relate(size_t i, size_t j) {
  size_t a = find(i);
  size_t b = find(j);
  if (a == b) return;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  min_index_[a] = std::min(min_index_[a], min_index_[b]);
}

size_t FinitePartition::representative(size_t i) const { return min_index_[find(i)]; }

size_t FinitePartition::block_count() const {
  size_t n = 0;
  for (size_t i = 0; i < parent_.size(); ++i)
    if (find(i) == i) ++n;
  return n;
}

std::vector<std::vector<size_t>> FinitePartition::blocks() const {
  std::map<size_t, std::vector<size_t>> by_rep;
  for (size_t i = 0; i < parent_.size(); ++i) by_rep[representative(i)].push_back(i);
  std::vector<std::vector<size_t>> out;
  out.reserve(by_rep.size());
  for (auto& [rep, ids] : by_rep) out.push_back(std::move(ids));
  return out;
}

bool operator==(const FinitePartition& a, const FinitePartition& b) {
  if (a.base_ != b.base_) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a.representative(i) != b.representative(i)) return false;
  return true;
}

namespace {

void require_same_base(const FinitePartition& r1, const FinitePartition& r2) {
  if (r1.base() != r2.base())
    throw DomainError("lattice operation on partitions over different event sets");
}

} // namespace

FinitePartition meet(const FinitePartition& r1, const FinitePartition& r2) {
  require_same_base(r1, r2);
  FinitePartition out(r1.base());
  std::map<std::pair<size_t, size_t>, size_t> first_of_pair;
  for (size_t i = 0; i < out.size(); ++i) {
    const auto key = std::make_pair(r1.representative(i), r2.representative(i));
    auto [it, inserted] = first_of_pair.try_emplace(key, i);
    if (!inserted) out.relate(it->second, i);
  }
  return out;
}

FinitePartition join(const FinitePartition& r1, const FinitePartition& r2) {
  require_same_base(r1, r2);
  FinitePartition out(r1.base());
  for (size_t i = 0; i < out.size(); ++i) {
    out.relate(i, r1.representative(i));
    out.relate(i, r2.representative(i));
  }
  return out;
}

bool finer_than(const FinitePartition& r1, const FinitePartition& r2) {
  require_same_base(r1, r2);
  for (size_t i = 0; i < r1.size(); ++i)
    if (!r2.same(i, r1.representative(i))) return false;
  return true;
}

FinitePartition induced(const Affine4& g, const FinitePartition& r, InducedPolicy policy) {
  const EventSetPtr& base = r.base();
  const size_t n = base->size();
  // image[j] = index of g * p_j, if it stays inside the set.
  std::vector<std::optional<size_t>> image(n);
  for (size_t j = 0; j < n; ++j) {
    const Event q = apply(g, base->event(j));
    image[j] = base->index_of_point(q);
    if (policy == InducedPolicy::Strict && !image[j])
      throw PreconditionError("induced(strict): event '" + base->id(j) +
                              "' escapes the event set");
  }
  FinitePartition out(base);
  // i (g.R) k iff the g-preimages of i and k are R-related; walking images of
  // R-blocks gives exactly those pairs.
  std::map<size_t, size_t> first_image_of_block;
  for (size_t j = 0; j < n; ++j) {
    if (!image[j]) continue;
    const size_t rep = r.representative(j);
    auto [it, inserted] = first_image_of_block.try_emplace(rep, *image[j]);
    if (!inserted) out.relate(it->second, *image[j]);
  }
  return out;
}

ClosureResult invariant_closure(const FinitePartition& r,
                                const std::vector<Affine4>& generators,
                                InducedPolicy policy, int max_rounds) {
  std::vector<Affine4> maps;
  maps.reserve(generators.size() * 2);
  for (const Affine4& g : generators) {
    maps.push_back(g);
    maps.push_back(affine_inverse(g));
  }
  ClosureResult res{r, false, 0};
  while (res.rounds < max_rounds) {
    ++res.rounds;
    bool changed = false;
    for (const Affine4& g : maps) {
      FinitePartition moved = induced(g, res.partition, policy);
      FinitePartition merged = join(res.partition, moved);
      if (!(merged == res.partition)) {
        res.partition = std::move(merged);
        changed = true;
      }
    }
    if (!changed) {
      res.converged = true;
      break;
    }
  }
  return res;
}

FinitePartition read_relation(std::istream& in, const std::string& source_name,
                              EventSetPtr base) {
  FinitePartition p(std::move(base));
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string a, b, extra;
    if (!(ss >> a)) continue;
    if (!(ss >> b) || (ss >> extra))
      throw ParseError(source_name + ":" + std::to_string(line_no) +
                       ": expected `id1 id2`");
    const auto ia = p.base()->index_of_id(a);
    const auto ib = p.base()->index_of_id(b);
    if (!ia)
      throw ParseError(source_name + ":" + std::to_string(line_no) + ": unknown id '" +
                       a + "'");
    if (!ib)
      throw ParseError(source_name + ":" + std::to_string(line_no) + ": unknown id '" +
                       b + "'");
    p.relate(*ia, *ib);
  }
  return p;
}

FinitePartition load_relation_file(const std::string& path, EventSetPtr base) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_relation(in, path, std::move(base));
}

void write_blocks(std::ostream& out, const FinitePartition& p) {
  for (const auto& block : p.blocks()) {
    for (size_t k = 0; k < block.size(); ++k)
      out << (k ? " " : "") << p.base()->id(block[k]);
    out << "\n";
  }
}

} // namespace relsim
