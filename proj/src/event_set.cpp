#include "relsim/event_set.hpp"

#include <deque>
#include <fstream>
#include <sstream>

namespace relsim {

void EventSet::add(std::string id, Event e) {
  if (id.empty()) throw ParseError("event id must be a non-empty token");
  if (by_id_.count(id)) throw ParseError("duplicate event id '" + id + "'");
  if (by_point_.count(e.x))
    throw ParseError("duplicate event point for id '" + id + "'");
  by_id_[id] = items_.size();
  by_point_[e.x] = items_.size();
  items_.emplace_back(std::move(id), std::move(e));
}

std::optional<size_t> EventSet::index_of_id(const std::string& id) const {
  auto it = by_id_.find(id);
  if (it == by_id_.end()) return std::nullopt;
  return it->second;
}

std::optional<size_t> EventSet::index_of_point(const Event& e) const {
  auto it = by_point_.find(e.x);
  if (it == by_point_.end()) return std::nullopt;
  return it->second;
}

EventSet EventSet::read(std::istream& in, const std::string& source_name) {
  EventSet set;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string id;
    if (!(ss >> id)) continue;
    std::string t1, t2, t3, t4, extra;
    if (!(ss >> t1 >> t2 >> t3 >> t4) || (ss >> extra))
      throw ParseError(source_name + ":" + std::to_string(line_no) +
                       ": expected `id x1 x2 x3 x4`");
    try {
      Event e(parse_scalar(t1), parse_scalar(t2), parse_scalar(t3), parse_scalar(t4));
      set.add(id, e);
    } catch (const ParseError& e) {
      throw ParseError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return set;
}

EventSet EventSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read(in, path);
}

void EventSet::write(std::ostream& out) const {
  for (const auto& [id, e] : items_) {
    out << id;
    for (int i = 0; i < 4; ++i) out << " " << format_scalar_compact(e[i]);
    out << "\n";
  }
}

EventSetPtr make_event_set(std::vector<std::pair<std::string, Event>> items) {
  auto set = std::make_shared<EventSet>();
  for (auto& [id, e] : items) set->add(std::move(id), std::move(e));
  return set;
}

EventSetPtr orbit_closure(const std::vector<Event>& seeds,
                          const std::vector<Affine4>& maps, size_t max_size,
                          const std::string& prefix) {
  std::map<Vec4, size_t, Vec4KeyLess> seen;
  std::vector<Event> ordered;
  std::deque<Event> frontier;
  auto push = [&](const Event& e) {
    if (seen.count(e.x)) return;
    if (ordered.size() >= max_size)
      throw PreconditionError("orbit closure exceeded " + std::to_string(max_size) +
                              " events; generators have infinite orbits here");
    seen[e.x] = ordered.size();
    ordered.push_back(e);
    frontier.push_back(e);
  };
  for (const Event& s : seeds) push(s);
  while (!frontier.empty()) {
    const Event e = frontier.front();
    frontier.pop_front();
    for (const Affine4& g : maps) push(apply(g, e));
  }
  auto set = std::make_shared<EventSet>();
  for (size_t i = 0; i < ordered.size(); ++i)
    set->add(prefix + std::to_string(i), ordered[i]);
  return set;
}

} // namespace relsim
