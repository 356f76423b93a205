#ifndef BMAT_BMX_HPP
#define BMAT_BMX_HPP

// bmx matrix files.
//
//   bmx 1
//   <r> <n>
//   r lines of n characters in {0,1}
//
// Lines starting with '#' may appear anywhere after the first line. Column j
// is element j. Writers emit a "# labels:" comment when labels are not 1..n,
// and readers honour it.

#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "bmat/errors.hpp"
#include "bmat/gf2.hpp"
#include "bmat/matroid.hpp"

namespace bmat::bmx {

inline void write(std::ostream& out, const Matroid& m) {
  out << "bmx 1\n";
  std::vector<Label> natural(m.size());
  std::iota(natural.begin(), natural.end(), 1);
  if (m.labels() != natural) {
    out << "# labels:";
    for (Label l : m.labels()) out << ' ' << l;
    out << '\n';
  }
  out << m.rank() << ' ' << m.size() << '\n';
  for (const auto& row : m.matrix().to_strings()) out << row << '\n';
}

inline std::string to_string(const Matroid& m) {
  std::ostringstream out;
  write(out, m);
  return out.str();
}

inline Matroid read(std::istream& in) {
  std::string line;
  bool ok = static_cast<bool>(std::getline(in, line));
  if (ok && !line.empty() && line.back() == '\r') line.pop_back();
  if (!ok || line != "bmx 1") throw InputError("bmx: first line must be 'bmx 1'");
  std::vector<std::string> body;
  std::vector<Label> labels;
  bool have_labels = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') {
      const std::string tag = "# labels:";
      if (line.compare(0, tag.size(), tag) == 0) {
        std::istringstream ls(line.substr(tag.size()));
        Label l;
        labels.clear();
        while (ls >> l) labels.push_back(l);
        have_labels = true;
      }
      continue;
    }
    if (line.empty()) continue;
    body.push_back(line);
  }
  if (body.empty()) throw InputError("bmx: missing dimension line");
  std::istringstream dims(body.front());
  long r = -1, n = -1;
  std::string extra;
  if (!(dims >> r >> n) || (dims >> extra) || r < 0 || n < 0) throw InputError("bmx: bad dimension line");
  if (static_cast<long>(body.size()) - 1 != r)
    throw InputError("bmx: expected " + std::to_string(r) + " matrix rows, found " + std::to_string(body.size() - 1));
  std::vector<std::string> rows(body.begin() + 1, body.end());
  for (const auto& row : rows) {
    if (static_cast<long>(row.size()) != n) throw InputError("bmx: row length differs from n");
    if (row.find_first_not_of("01") != std::string::npos) throw InputError("bmx: rows may only contain 0 and 1");
  }
  BitMatrix matrix = r == 0 ? BitMatrix(0, static_cast<std::size_t>(n)) : BitMatrix::from_strings(rows);
  if (have_labels) {
    if (static_cast<long>(labels.size()) != n) throw InputError("bmx: label comment does not list n labels");
    return make_matroid(matrix, labels);
  }
  return make_matroid(matrix);
}

inline Matroid read_string(const std::string& text) {
  std::istringstream in(text);
  return read(in);
}

inline Matroid read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return read(in);
}

}  // namespace bmat::bmx

#endif  // BMAT_BMX_HPP
