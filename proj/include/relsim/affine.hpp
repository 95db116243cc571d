#ifndef RELSIM_AFFINE_HPP
#define RELSIM_AFFINE_HPP

#include <iosfwd>
#include <string>

#include "relsim/spacetime.hpp"

namespace relsim {

// Affinity of R^4: x |-> linear * x + translation. The linear part must be
// invertible; constructors below only ever build invertible maps.
struct Affine4 {
  Mat4 linear = Mat4::identity();
  Vec4 translation;

  friend bool operator==(const Affine4&, const Affine4&) = default;
};

inline Affine4 identity_affine() { return Affine4{}; }

Affine4 compose(const Affine4& g, const Affine4& h); // first h, then g
Affine4 affine_inverse(const Affine4& g);

inline Event apply(const Affine4& g, const Event& p) {
  return Event(g.linear * p.x + g.translation);
}

// Free vectors transform by the linear part only.
inline Vec4 apply_linear(const Affine4& g, const Vec4& v) { return g.linear * v; }

// Group-element file format: comments start with '#'; the payload is five
// rows of four scalar literals (the matrix rows, then the translation row).
Affine4 read_affine(std::istream& in, const std::string& source_name);
Affine4 load_affine_file(const std::string& path);
void write_affine(std::ostream& out, const Affine4& g);

} // namespace relsim

#endif
