#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "porthos/bigint.hpp"
#include "porthos/errors.hpp"
#include "porthos/expansion.hpp"

namespace porthos {

// Reduced word over free generators: letters (generator index, exponent +-1),
// no adjacent cancelling pair.
struct FreeWord {
  std::vector<std::pair<int, int>> letters;
  bool operator==(const FreeWord&) const = default;
};

FreeWord reduce(FreeWord w);
FreeWord free_multiply(const FreeWord& a, const FreeWord& b);
FreeWord free_inverse(const FreeWord& a);

// Element of Z, Z_N, or a free group.
class GroupElement {
 public:
  struct ModValue {
    long long value;  // in [0, modulus)
    long long modulus;
    bool operator==(const ModValue&) const = default;
  };

  static GroupElement integer(long long v);
  static GroupElement mod(long long v, long long modulus);
  static GroupElement word(FreeWord w);
  static GroupElement generator(int index);

  bool is_integer() const { return std::holds_alternative<long long>(v_); }
  bool is_mod() const { return std::holds_alternative<ModValue>(v_); }
  bool is_word() const { return std::holds_alternative<FreeWord>(v_); }
  long long integer_value() const { return std::get<long long>(v_); }
  const ModValue& mod_value() const { return std::get<ModValue>(v_); }
  const FreeWord& word_value() const { return std::get<FreeWord>(v_); }

  GroupElement inverse() const;
  bool is_identity() const;
  std::string key() const;  // canonical hashable form

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  bool operator==(const GroupElement&) const = default;

 private:
  std::variant<long long, ModValue, FreeWord> v_;
};

// Product with inversion applied at flagged positions. All elements must come
// from the same group.
GroupElement alternating_product(const std::vector<GroupElement>& ts, const StarPattern& pattern);

struct DissociateResult {
  bool dissociate = false;
  std::optional<std::vector<GroupElement>> witness;  // the offending ordered tuple
};

// Exhaustive check over ordered p-tuples of distinct elements with the full
// alternating pattern. Vacuously true when |set| < p.
// Guard: falling(|set|, p) <= 1e7.
DissociateResult is_p_dissociate(const std::vector<GroupElement>& set, int p);

// True iff every transversal (one element per block) is p-dissociate.
bool family_dissociate(const std::vector<std::vector<GroupElement>>& blocks, int p);

struct NqResult {
  std::uint64_t n_q = 0;                 // maximal multiplicity
  std::optional<GroupElement> argmax_t;  // a value attaining it
};

// Multiplicity statistics of omega-terminated alternating products over
// ordered q-tuples of distinct elements. Guard: |set|^q <= 1e7.
NqResult count_Nq(const std::vector<GroupElement>& set, int q);

}  // namespace porthos
