#pragma once

// Brute-force reference computations used to cross-check the library.

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

#include "raag/autos.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag::testing {

/// A word encoded as signed (vertex + 1) integers.
using Code = std::vector<int>;

Code encode(const Word& w);
Word decode(const Code& c);

/// Shortest words reachable from `x` by swapping adjacent commuting letters,
/// deleting adjacent inverse pairs and, if `insert_limit` exceeds the word
/// length, inserting inverse pairs while staying within `insert_limit` letters.
std::set<Code> minimal_representatives(const DefiningGraph& g, const Word& x,
                                       std::size_t insert_limit = 0);

/// Equality decided by comparing minimal representatives.
bool oracle_equal(const DefiningGraph& g, const Word& x, const Word& y,
                  std::size_t insert_limit = 0);

/// Longest same-sign run of w over all minimal representatives.
std::size_t oracle_max_power(const DefiningGraph& g, const Word& x, Vertex w);

/// All group elements of length <= max_len, as minimal representatives.
std::vector<Word> ball(const DefiningGraph& g, std::size_t max_len);

/// Search the ball of radius max_len for c with f(v) = c v c^-1 for all v.
std::optional<Word> brute_inner(const DefiningGraph& g, const AutWord& f, std::size_t max_len);

/// Components of the graph minus v joined along edges with an endpoint
/// outside st(v), keeping those that leave st(v). Union-find based.
std::vector<VertexSet> nontrivial_hat_parts(const DefiningGraph& g, Vertex v);

/// Rank of the subgroup generated by hat-part conjugations, measured by the
/// exponent vectors of their conjugating data modulo centralisers and inner
/// automorphisms.
std::size_t kr_rank_oracle(const DefiningGraph& g);

/// Rank of an integer matrix (rows of equal length).
std::size_t integer_rank(std::vector<std::vector<long long>> rows);

}  // namespace raag::testing
