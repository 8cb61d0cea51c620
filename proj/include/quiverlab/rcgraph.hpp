#pragma once

// Pipe dreams on a d x d grid. A pipe enters each row from the left and
// leaves through the top; crosses pass straight through, elbows turn
// west->north and south->east. Crosses are only allowed at (i,j) with
// i + j <= d.

#include <set>
#include <string>
#include <vector>

#include "quiverlab/permcore.hpp"
#include "quiverlab/polyring.hpp"
#include "quiverlab/ranks.hpp"

namespace quiverlab {

class PipeDream {
 public:
  PipeDream() = default;
  // Throws InvalidInput for a cross outside i + j <= d.
  PipeDream(int d, const std::vector<Box>& crosses);

  int d() const { return d_; }
  const std::set<Box>& crosses() const { return crosses_; }
  bool is_cross(int i, int j) const { return crosses_.count({i, j}) > 0; }
  int cross_count() const { return static_cast<int>(crosses_.size()); }

  // Letters i+j-1 of the crosses, each row right to left, rows top to bottom.
  ReducedWord word() const;

  auto operator<=>(const PipeDream&) const = default;

 private:
  int d_ = 0;
  std::set<Box> crosses_;
};

// Exit columns of the pipes entering rows 1..d.
Permutation trace(const PipeDream& D);

// Every pair of pipes crosses at most once.
bool is_reduced(const PipeDream& D);

bool is_compatible_sequence(std::span<const int> word, std::span<const int> seq);
std::vector<std::vector<int>> compatible_sequences(std::span<const int> word);

// Crosses at (seq_k, word_k - seq_k + 1) in a d x d grid; d defaults to
// max(word) + 1. Throws NotCompatible.
PipeDream rc_from_compatible(std::span<const int> word, std::span<const int> seq, int d = 0);

// RC(w), sorted. Rows are filled top to bottom with decreasing letters;
// the state is the inverse of the part of w still to be written. With
// max_row > 0 only pipe dreams with every cross in rows <= max_row are kept.
std::vector<PipeDream> enumerate_rc(const Permutation& w, const Limits& limits = {},
                                    int max_row = 0);

// Same set built from reduced words and their compatible sequences. Test
// oracle; guarded by limits.max_length.
std::vector<PipeDream> enumerate_rc_words(const Permutation& w, const Limits& limits = {});

// Sum over RC(w) of prod (x_i - y_j) over crosses.
MVPoly schubert_double_pipe(const Permutation& w, const Limits& limits = {});
// Sum over RC(w) of prod x_i over crosses.
MVPoly schubert_single_pipe(const Permutation& w, const Limits& limits = {});

// Pipes entering the top of row strip k-1 at the columns of column strip
// n-k+1 leave the bottom of that row strip through column strip n-k exactly
// along the edges of w_k.
bool maps_to(const PipeDream& D, const LacingDiagram& W, const RankConditions& r);

// RC-graph of the embedding of rho with every cross in the northwest
// rows x cols rectangle, from the canonical reduced word.
PipeDream local_rc(const PartialPermutation& rho);

// Crosses on the hom region plus rotated local RC-graphs of the w_k.
// Throws NotMinimal unless l(W) = d(r).
PipeDream theorem1_embed(const LacingDiagram& W, const RankConditions& r);

// '+' for crosses, '%' for elbows, one line per row, boxes with i+j <= d.
std::string render_ascii(const PipeDream& D);
std::string render_ascii(const LacingDiagram& W);

}  // namespace quiverlab
