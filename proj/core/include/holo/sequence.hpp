#ifndef HOLO_SEQUENCE_HPP
#define HOLO_SEQUENCE_HPP

#include <iosfwd>
#include <map>
#include <vector>

#include <holo/rat.hpp>

namespace holo {

using Point = std::vector<long>;

// Exact rational values of a sequence on a finite set of integer points.
class SequenceTable {
 public:
  SequenceTable() : arity_(1) {}
  explicit SequenceTable(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  const std::map<Point, Rat>& values() const { return values_; }

  bool has(const Point& p) const { return values_.count(p) != 0; }
  const Rat& at(const Point& p) const;
  void set(const Point& p, const Rat& v);

  // record format: one line per point, indices then value, e.g. "3 5 10/3"
  static SequenceTable read(std::istream& in, int arity);
  void write(std::ostream& out) const;

 private:
  int arity_;
  std::map<Point, Rat> values_;
};

}  // namespace holo

#endif
