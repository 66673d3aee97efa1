#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ppk {

using Natural = std::uint64_t;

bool is_prime(unsigned p);
/// Base-p digit sum s_p(n).
unsigned digit_sum(Natural n, unsigned p);
/// p-adic valuation of n >= 1.
unsigned p_valuation(Natural n, unsigned p);

/// Finite base-p digit string w_{mu-1}...w_0; the empty word is epsilon.
///
/// Digits are stored least significant first, so digit(i) is w_i. Text form
/// is most significant first, one character per digit, "eps" for epsilon.
class Word {
 public:
  explicit Word(unsigned base);
  /// Digits given most significant first, as written.
  Word(unsigned base, std::initializer_list<unsigned> msd_first);
  static Word from_lsd(unsigned base, std::vector<std::uint8_t> lsd_first);
  /// UsageError on characters outside 0..p-1.
  static Word parse(std::string_view text, unsigned base);

  unsigned base() const { return base_; }
  std::size_t length() const { return d_.size(); }
  bool empty() const { return d_.empty(); }
  unsigned digit(std::size_t i) const { return d_[i]; }
  unsigned leading() const { return d_.back(); }
  unsigned trailing() const { return d_.front(); }
  const std::vector<std::uint8_t>& lsd_digits() const { return d_; }

  std::string str() const;

  /// Length-then-lexicographic on the written (most significant first) form.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);
  friend bool operator==(const Word& a, const Word& b) { return a.base_ == b.base_ && a.d_ == b.d_; }

 private:
  unsigned base_;
  std::vector<std::uint8_t> d_;
};

/// Proper base-p expansion of n (epsilon for 0).
Word expand(Natural n, unsigned p);
/// Integer represented by the word; UsageError if it does not fit 64 bits.
Natural value(const Word& w);

/// Occurrences of w as a factor of v, v read with infinite zero padding on
/// the left. DomainError if w is all zeros (or empty).
Natural factor_count(const Word& v, const Word& w);
Natural factor_count(Natural n, const Word& w);

struct WordClass {
  bool in_W;        ///< length >= 2, leading digit != 0, trailing digit != p-1
  bool in_W_tilde;  ///< length >= 1, leading digit != 0
  bool in_W_j(unsigned j, std::size_t length) const { return in_W && length <= j + 1; }
};
WordClass classify(const Word& w);
inline bool is_admissible(const Word& w) { return classify(w).in_W; }

struct Truncations {
  Word left;
  Word right;
  Word left_right;
};
/// w_L, w_R and w_LR for w in W-tilde or epsilon; DomainError on a leading 0.
Truncations truncations(const Word& w);

/// W_j in length-then-lex order; empty for j = 0.
std::vector<Word> enumerate_admissible(unsigned p, unsigned j);
/// All words of W with length in [2, max_len].
std::vector<Word> enumerate_admissible_by_length(unsigned p, std::size_t max_len);

/// |w| - 1; DomainError for epsilon.
unsigned weight(const Word& w);

/// Bitwise complement of a base-2 word; UsageError otherwise.
Word complement(const Word& w);

/// Word obtained by concatenating u (high part) and v (low part).
Word concat(const Word& high, const Word& low);
/// Word repeated k times.
Word repeat(const Word& w, std::size_t k);

/// Test integer used for uniqueness of P_j: concatenation v_{M-1}...v_0 with
/// v_m = (w_m N^l 0^l)^{a_m} (N^l 0^l)^{R-a_m}, w_m the m-th word of W_l.
/// Returned as a word since it quickly exceeds 64 bits.
Word separator_word(const std::vector<unsigned>& a, unsigned ell, unsigned R, unsigned p);
/// Same, as an integer; UsageError when it does not fit.
Natural separator_integer(const std::vector<unsigned>& a, unsigned ell, unsigned R, unsigned p);

}  // namespace ppk
