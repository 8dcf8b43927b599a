#ifndef WM_COMMON_HPP
#define WM_COMMON_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wm {

using Vertex = int;

/// Bitmask over vertex labels 0..63.
using VertexSet = std::uint64_t;

inline constexpr Vertex kMaxLabel = 63;

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }
constexpr int cardinality(VertexSet s) { return std::popcount(s); }
constexpr bool has_vertex(VertexSet s, Vertex v) { return (s >> v) & 1U; }
constexpr bool is_subset(VertexSet a, VertexSet b) { return (a & ~b) == 0; }
constexpr bool is_proper_subset(VertexSet a, VertexSet b) { return a != b && is_subset(a, b); }
constexpr Vertex min_vertex(VertexSet s) { return std::countr_zero(s); }

std::vector<Vertex> to_vector(VertexSet s);
VertexSet to_vertex_set(const std::vector<Vertex>& vertices);

/// Lexicographic comparison of the ascending vertex lists of two sets.
bool lex_less(VertexSet a, VertexSet b);

/// Calls fn(v) for every vertex of s in ascending order.
template <class Fn>
void for_each_vertex(VertexSet s, Fn&& fn) {
  while (s != 0) {
    const Vertex v = std::countr_zero(s);
    s &= s - 1;
    fn(v);
  }
}

enum class ErrorKind { kInvalidArgument, kParse, kValidation, kLimit, kInternal };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace wm

#endif  // WM_COMMON_HPP
