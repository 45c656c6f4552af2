#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "catgraph/limits.hpp"
#include "catgraph/morphism.hpp"

namespace catgraph {

struct ClassifierResult {
  Graph omega;
  Morphism truth;  // terminal -> omega
};

struct ClassifierReport {
  std::optional<ClassifierResult> result;
  // populated when no classifier exists
  std::string refutation;
  std::optional<Morphism> witness_mono;      // the mono whose classification fails
  std::optional<Graph> witness_pullback;     // pullback of the forced chi with truth
  std::optional<Graph> witness_expected;     // the subobject the pullback had to be
};

/// G and SiG share the two-vertex classifier with a loop at True and one
/// True-False edge; StG needs a second loop at True and a loop at False.
/// SiLlG, SiStG and SiLlStG have none; the report carries the concrete
/// pullback contradiction (or the terminal failure for SiLlStG).
ClassifierReport subobject_classifier(CategoryId c);

/// Characteristic morphism of a mono sub: A -> X for c in {G, SiG, StG}:
/// image parts map to the True parts, outside vertices to False, outside
/// edges by how many endpoints lie in the image. Throws NotMono /
/// NoClassifier.
Morphism characteristic_morphism(const Morphism& sub, CategoryId c);

struct ClassifierSoundness {
  bool pass = true;
  std::string detail;
  int monos_checked = 0;
};

/// For every subgraph A of X: pullback(chi_A, truth) must recover A as a
/// subobject of X, and chi_A must be the unique morphism X -> Omega doing
/// so (exhaustive scan of hom(X, Omega)).
ClassifierSoundness verify_classifier_on(const Graph& X, const ClassifierResult& cls,
                                         CategoryId c);

struct ExponentialResult {
  Graph exp;       // H^G
  Graph base;      // G
  Graph target;    // H
  ConeResult prod;  // product(exp, base, c)
  Morphism ev;      // prod.apex -> target
  // exp vertex id -> vertex function V(G) -> V(H)
  std::map<PartId, std::map<PartId, PartId>> vertex_function;
};

/// SiLlG: vertices are the homs G -> H; SiStG: vertices are all vertex
/// functions. Edges join f1, f2 whenever each part (SiLlG) or edge (SiStG)
/// of G has, in both orientations, an admissible image part of H between the
/// endpoint images. Returns nullopt for the categories without
/// exponentiation; see refute_exponentiation for those.
std::optional<ExponentialResult> exponential(const Graph& G_, const Graph& H,
                                             CategoryId c);

/// The transpose of g : X x G -> H across the exponential: the unique
/// morphism gbar : X -> H^G with ev . (gbar x 1) = g. xg_product must be
/// product(X, G, c) and g must be a morphism out of its apex.
/// Throws NoTranspose when no such morphism exists (a construction bug).
Morphism transpose(const Morphism& g, const ConeResult& xg_product,
                   const ExponentialResult& expo, CategoryId c);

struct PigeonholeWitness {
  int i = 0, j = 0;  // distinct indices with identical evaluation patterns
};

/// Scans an assignment of one of 16 patterns to each of 24 indices and
/// returns the first repeated pattern's two indices.
PigeonholeWitness pigeonhole_refutation(const std::map<int, int>& assignment);

struct ExpRefutation {
  CategoryId category;
  std::vector<std::uint64_t> counts;
  int loops_m = 0, loops_n = 0;                 // G: the loop split
  std::optional<PigeonholeWitness> collision;   // G: collision on the fixed assignment
  std::uint64_t random_trials = 0;              // G: seeded assignments, all collided
  std::string narrative;
};

/// Reproduces the counting refutation of exponentiation with evaluation.
///   G:        hom counts 2, 16, 64, 512 over constructed products, the
///             derived profile (2 vertices, 24 edges, 14 loops split 7+7),
///             and pigeonhole collisions among the 24 candidate edges.
///   SiG:      8 morphisms from the looped product vs at most 4 from the
///             one-loop vertex into any two-vertex simple graph.
///   StG:      1, 4, then 16 against the 4 admitted by the forced candidate.
///   SiLlStG:  4, 4, then 2 with the odd-cycle obstruction.
/// Throws WrongCategory for SiLlG / SiStG.
ExpRefutation refute_exponentiation(CategoryId c, unsigned seed = 12345);

/// Exhaustive search for a section-like g with f.g.f = f.
std::optional<Morphism> check_choice(const Morphism& f, CategoryId c);

struct TwoValuedReport {
  bool applicable = false;  // the category has a classifier
  bool two_valued = false;
  Graph one_plus_one;
  std::optional<Graph> omega;
  std::string detail;
};

/// Compares the coproduct of two terminal objects against the classifier.
TwoValuedReport check_two_valued(CategoryId c);

}  // namespace catgraph
