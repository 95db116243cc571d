#include "relsim/affine.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace relsim {

Affine4 compose(const Affine4& g, const Affine4& h) {
  Affine4 r;
  r.linear = g.linear * h.linear;
  r.translation = g.linear * h.translation + g.translation;
  return r;
}

Affine4 affine_inverse(const Affine4& g) {
  Affine4 r;
  r.linear = inverse(g.linear);
  r.translation = -(r.linear * g.translation);
  return r;
}

namespace {

bool next_payload_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    if (!blank) return true;
  }
  return false;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

} // namespace

Affine4 read_affine(std::istream& in, const std::string& source_name) {
  Affine4 g;
  std::string line;
  int line_no = 0;
  for (int row = 0; row < 5; ++row) {
    if (!next_payload_line(in, line, line_no))
      throw ParseError(source_name + ": expected 5 rows of 4 scalars, got " +
                       std::to_string(row));
    const auto toks = split_ws(line);
    if (toks.size() != 4)
      throw ParseError(source_name + ":" + std::to_string(line_no) +
                       ": expected 4 scalar literals per row");
    for (int j = 0; j < 4; ++j) {
      Scalar v;
      try {
        v = parse_scalar(toks[static_cast<size_t>(j)]);
      } catch (const ParseError& e) {
        throw ParseError(source_name + ":" + std::to_string(line_no) + ": " + e.what());
      }
      if (row < 4)
        g.linear.at(row, j) = v;
      else
        g.translation[j] = v;
    }
  }
  if (det(g.linear).is_zero())
    throw ParseError(source_name + ": linear part is singular");
  return g;
}

Affine4 load_affine_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  return read_affine(in, path);
}

void write_affine(std::ostream& out, const Affine4& g) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j)
      out << (j ? " " : "") << format_scalar_compact(g.linear.at(i, j));
    out << "\n";
  }
  for (int j = 0; j < 4; ++j)
    out << (j ? " " : "") << format_scalar_compact(g.translation[j]);
  out << "\n";
}

} // namespace relsim
