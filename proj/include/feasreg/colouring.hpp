#pragma once

#include "feasreg/enumeration.hpp"
#include "feasreg/graph.hpp"
#include "feasreg/permutation.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace feasreg {

/// A permutation with one colour (1-based) per position.
struct ColouredPermutation {
  Permutation perm;
  std::vector<int> colours;

  std::size_t size() const noexcept { return perm.size(); }
  int max_colour() const;

  /// Machine form "1:1 3:1 2:2" (value:colour per position).
  std::string to_string() const;
  /// Human form "red13blue2": colour names with runs of values.
  std::string pretty() const;

  friend bool operator==(const ColouredPermutation&, const ColouredPermutation&) = default;
  /// Size, then permutation lex order, then colour words compared from the
  /// right (colex).
  friend std::strong_ordering operator<=>(const ColouredPermutation& a, const ColouredPermutation& b);
};

/// "red", "blue", "green", then "c4", "c5", ...
std::string colour_name(int colour);

/// Parses the machine form produced by ColouredPermutation::to_string.
ColouredPermutation parse_coloured(std::string_view text);

/// Right-to-left greedy colouring: scanning values from the largest down,
/// each entry takes the least colour not used by an earlier, larger entry.
ColouredPermutation ritmo(const Permutation& sigma);

/// Restriction to the given increasing positions, re-standardised.
ColouredPermutation restrict_to(const ColouredPermutation& cp, std::span<const std::size_t> positions);
ColouredPermutation begin_pattern(const ColouredPermutation& cp, std::size_t k);
ColouredPermutation end_pattern(const ColouredPermutation& cp, std::size_t k);

/// Uses exactly the colours 1..m.
bool is_rainbow(const ColouredPermutation& cp, int m);

struct WitnessedColouring {
  ColouredPermutation state;
  /// A rainbow avoider of the decreasing pattern of size n whose RITMO
  /// colouring ends in `state`.
  Permutation witness;
};

/// C_{n-1}(k): colourings of size k inherited from RITMO colourings of
/// rainbow avoiders of n...1, each with one witness, sorted.
std::vector<WitnessedColouring> enumerate_inherited(std::size_t n, std::size_t k,
                                                    const EnumerationLimits& limits = {});

/// Ov^mon[k, n...1]: vertices C_{n-1}(k-1), edges C_{n-1}(k).
struct ColouredOverlapGraph {
  std::size_t n = 0;
  std::size_t k = 0;
  DirectedMultigraph<ColouredPermutation> graph;
  /// Witness permutation per edge id (not necessarily minimal).
  std::vector<Permutation> edge_witnesses;
};

ColouredOverlapGraph build_coloured_overlap(std::size_t n, std::size_t k, const EnumerationLimits& limits = {});

/// Walk of the windows of ritmo(sigma).
Walk coloured_walk_of(const ColouredOverlapGraph& cog, const Permutation& sigma);

struct ActiveSite {
  int height = 0;
  int colour = 0;
  friend auto operator<=>(const ActiveSite&, const ActiveSite&) = default;
};

/// Height and colour of the final entry of each out-edge of vertex v, sorted.
std::vector<ActiveSite> active_sites(const ColouredOverlapGraph& cog, std::size_t v);

/// z(f) for f = 0..max_colour+1 (index f). z(0) = |sigma|+2; otherwise one
/// more than the value of the last entry of colour f, or 1 if absent. Larger
/// colours also give 1.
std::vector<int> z_values(const Permutation& sigma);

/// Values of sigma's last j entries listed by pattern height: index l in
/// 1..j holds the value of the entry of height l in en_j(sigma); index 0 is
/// 0 and index j+1 is |sigma|+1.
std::vector<int> tilde_heights(const Permutation& sigma, std::size_t j);

/// Appends one value to a rainbow avoider of the decreasing pattern of size
/// n so that the coloured end pattern of size k becomes `next`.
Permutation extend_monotone(const Permutation& sigma, const ColouredPermutation& next, std::size_t n);

/// Realizes walks of Ov^mon[k, n...1] by starting from a minimal witness of
/// the first edge padded with (n-1)...1 and extending one value per edge.
class MonotoneRealizer {
 public:
  explicit MonotoneRealizer(const ColouredOverlapGraph& cog, std::size_t max_witness_size = 12);

  /// Least-size, then lex least, avoider whose RITMO colouring ends in edge e.
  const Permutation& minimal_witness(std::size_t e) const { return minimal_.at(e); }
  /// max_e |minimal witness| + n - k - 1.
  std::size_t constant() const;

  struct Result {
    Permutation sigma;
    /// Edges of the prefix coming from the padded starting witness.
    Walk prefix;
  };
  /// sigma with W_k(ritmo(sigma)) = prefix followed by w, and
  /// |sigma| <= |w| + constant().
  Result realize(const Walk& w) const;

 private:
  const ColouredOverlapGraph* cog_;
  std::vector<Permutation> minimal_;
};

}  // namespace feasreg
