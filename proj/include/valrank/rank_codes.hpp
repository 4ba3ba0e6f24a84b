#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "valrank/chain_rings.hpp"
#include "valrank/fields.hpp"
#include "valrank/skew.hpp"

namespace valrank {

enum class CodeKind { Gabidulin, Twisted, Custom };

/// A K-linear code in L[G], described by its integral part over the ring of
/// the descriptor. Twisted codes are {sum_{i<ell} f_i s^i + eta s^h(f_0) s^ell}.
struct CodeSpec {
  RingPtr ring;
  CodeKind kind = CodeKind::Gabidulin;
  int ell = 1;
  std::optional<GRElement> eta;
  int h = 0;
  std::vector<SigmaPoly> generators;

  static CodeSpec gabidulin(RingPtr ring, int ell);
  static CodeSpec twisted(RingPtr ring, int ell, GRElement eta, int h);
  static CodeSpec custom(RingPtr ring, std::vector<SigmaPoly> generators);
};

constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;
/// Budget from VALRANK_ENUM_BUDGET, or the default.
std::uint64_t enumeration_budget();

/// Generators of the integral code C_0 as an R-module.
std::vector<SigmaPoly> code_generators(const CodeSpec& spec);
/// n^2 x g coordinate matrix: row b*n + a holds the xi^a-coordinate of the s^b coefficient.
Matrix<Zpk> generator_coordinates(const RingPtr& ring, const std::vector<SigmaPoly>& gens);
std::vector<Valuation> code_divisor_valuations(const CodeSpec& spec);

/// |C_i| as a (possibly huge) count; saturates at UINT64_MAX.
std::uint64_t codeword_count(const CodeSpec& spec, int depth);

/// Streams every distinct element of the reduction C_i exactly once.
void enumerate_codewords(const CodeSpec& spec, int depth, const std::function<void(const SigmaPoly&)>& visit,
                         std::uint64_t budget = enumeration_budget());

/// Minimum inner rank over the nonzero codewords of C_i.
int min_distance(const CodeSpec& spec, int depth, std::uint64_t budget = enumeration_budget());

Rational k_sequence(const std::vector<Valuation>& divisor_valuations, int i);

struct SingletonReport {
  int min_distance = 0;
  int bound = 0;
  int free_rank = 0;
  bool is_free = false;
  bool is_mrd = false;
};
SingletonReport singleton_check(const CodeSpec& spec, int depth, std::uint64_t budget = enumeration_budget());

struct FiltrationReport {
  int up_to = 0;
  std::vector<Rational> k_values;
  std::vector<int> d_values;
  std::vector<Valuation> divisor_valuations;
  std::vector<bool> mrd_flags;
};
FiltrationReport filtration_report(const CodeSpec& spec, int up_to, std::uint64_t budget = enumeration_budget());

}  // namespace valrank
