#ifndef RELSIM_EVENT_SET_HPP
#define RELSIM_EVENT_SET_HPP

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relsim/affine.hpp"

namespace relsim {

// Finite indexed set of named events. Ids are unique tokens and the events
// are pairwise distinct as points of R^4.
class EventSet {
public:
  EventSet() = default;

  // Throws ParseError on duplicate id or duplicate point.
  void add(std::string id, Event e);

  size_t size() const { return items_.size(); }
  const std::string& id(size_t i) const { return items_[i].first; }
  const Event& event(size_t i) const { return items_[i].second; }

  std::optional<size_t> index_of_id(const std::string& id) const;
  std::optional<size_t> index_of_point(const Event& e) const;

  // File format: one event per line, `id x1 x2 x3 x4`, '#' comments. Scalar
  // literals are written without embedded whitespace.
  static EventSet read(std::istream& in, const std::string& source_name);
  static EventSet load_file(const std::string& path);
  void write(std::ostream& out) const;

private:
  std::vector<std::pair<std::string, Event>> items_;
  std::map<std::string, size_t> by_id_;
  std::map<Vec4, size_t, Vec4KeyLess> by_point_;
};

using EventSetPtr = std::shared_ptr<const EventSet>;

// Convenience for tests and built-in suite instances.
EventSetPtr make_event_set(std::vector<std::pair<std::string, Event>> items);

// Closure of `seeds` under the listed maps, up to `max_size` events. Ids are
// formatted as "<prefix><index>". Throws if the closure exceeds max_size
// (the generators then do not act with finite orbits on the seeds).
EventSetPtr orbit_closure(const std::vector<Event>& seeds,
                          const std::vector<Affine4>& maps, size_t max_size,
                          const std::string& prefix = "e");

} // namespace relsim

#endif
