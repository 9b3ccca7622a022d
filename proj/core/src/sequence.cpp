#include <holo/sequence.hpp>

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace holo {

const Rat& SequenceTable::at(const Point& p) const {
  auto it = values_.find(p);
  if (it == values_.end()) throw std::out_of_range("SequenceTable: point outside domain");
  return it->second;
}

void SequenceTable::set(const Point& p, const Rat& v) {
  if (static_cast<int>(p.size()) != arity_)
    throw std::invalid_argument("SequenceTable: arity mismatch");
  values_[p] = v;
}

SequenceTable SequenceTable::read(std::istream& in, int arity) {
  SequenceTable t(arity);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Point p(arity);
    std::string tok;
    bool blank = true;
    for (int i = 0; i < arity; ++i) {
      if (!(ls >> p[i])) {
        if (i == 0) { blank = true; break; }
        throw std::invalid_argument("SequenceTable: short record '" + line + "'");
      }
      blank = false;
    }
    if (blank) continue;
    if (!(ls >> tok)) throw std::invalid_argument("SequenceTable: missing value in '" + line + "'");
    t.set(p, parse_rat(tok));
  }
  return t;
}

void SequenceTable::write(std::ostream& out) const {
  for (const auto& [p, v] : values_) {
    for (long x : p) out << x << ' ';
    out << rat_str(v) << '\n';
  }
}

}  // namespace holo
