#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turanforge {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when an operation's input violates a documented precondition.
/// The message names the failed check.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant that the algorithm guarantees does not
/// hold. Always a bug.
class InternalFault : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Sorted, duplicate-free set of vertex indices.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
  explicit VertexSet(std::vector<Vertex> vs);

  /// Wraps an already strictly increasing vector without re-sorting.
  static VertexSet from_sorted(std::vector<Vertex> vs);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(Vertex v) const;
  /// Largest member plus one, or zero for the empty set.
  std::size_t bound() const { return members_.empty() ? 0 : members_.back() + 1; }

  VertexSet united(const VertexSet& other) const;
  VertexSet intersected(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  std::vector<Vertex> members_;
};

std::string to_string(const VertexSet& s);

/// Exact rational parsed from "p/q", "p" or a finite decimal such as "0.25".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline Edge canonical(Edge e) {
  return e.first < e.second ? e : Edge{e.second, e.first};
}

}  // namespace turanforge
