#include "ppk/words.hpp"

#include <algorithm>

#include "ppk/errors.hpp"

namespace ppk {

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

unsigned digit_sum(Natural n, unsigned p) {
  unsigned s = 0;
  for (; n; n /= p) s += static_cast<unsigned>(n % p);
  return s;
}

unsigned p_valuation(Natural n, unsigned p) {
  if (n == 0) throw DomainError("valuation of zero");
  unsigned v = 0;
  for (; n % p == 0; n /= p) ++v;
  return v;
}

Word::Word(unsigned base) : base_(base) {
  if (!is_prime(base)) throw UsageError("base " + std::to_string(base) + " is not prime");
}

Word::Word(unsigned base, std::initializer_list<unsigned> msd_first) : Word(base) {
  for (unsigned d : msd_first) {
    if (d >= base) throw UsageError("digit out of range for base " + std::to_string(base));
    d_.push_back(static_cast<std::uint8_t>(d));
  }
  std::reverse(d_.begin(), d_.end());
}

Word Word::from_lsd(unsigned base, std::vector<std::uint8_t> lsd_first) {
  Word w(base);
  for (auto d : lsd_first)
    if (d >= base) throw UsageError("digit out of range for base " + std::to_string(base));
  w.d_ = std::move(lsd_first);
  return w;
}

Word Word::parse(std::string_view text, unsigned base) {
  Word w(base);
  if (text == "eps") return w;
  if (text.empty()) throw UsageError("empty word text (use \"eps\")");
  if (base > 10) throw UsageError("text form supports bases up to 10");
  for (auto it = text.rbegin(); it != text.rend(); ++it) {
    char ch = *it;
    if (ch < '0' || ch >= static_cast<char>('0' + base))
      throw UsageError("invalid word '" + std::string(text) + "' for base " + std::to_string(base));
    w.d_.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return w;
}

std::string Word::str() const {
  if (d_.empty()) return "eps";
  std::string s;
  s.reserve(d_.size());
  for (auto it = d_.rbegin(); it != d_.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
  return s;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (a.base_ != b.base_) return a.base_ <=> b.base_;
  if (a.d_.size() != b.d_.size()) return a.d_.size() <=> b.d_.size();
  for (std::size_t i = a.d_.size(); i-- > 0;)
    if (a.d_[i] != b.d_[i]) return a.d_[i] <=> b.d_[i];
  return std::strong_ordering::equal;
}

Word expand(Natural n, unsigned p) {
  std::vector<std::uint8_t> d;
  for (; n; n /= p) d.push_back(static_cast<std::uint8_t>(n % p));
  return Word::from_lsd(p, std::move(d));
}

Natural value(const Word& w) {
  Natural v = 0;
  const unsigned p = w.base();
  for (std::size_t i = w.length(); i-- > 0;) {
    Natural next;
    if (__builtin_mul_overflow(v, p, &next) || __builtin_add_overflow(next, w.digit(i), &next))
      throw UsageError("word " + w.str() + " does not fit in 64 bits");
    v = next;
  }
  return v;
}

Natural factor_count(const Word& v, const Word& w) {
  if (v.base() != w.base()) throw UsageError("factor_count: base mismatch");
  const auto& wd = w.lsd_digits();
  if (std::all_of(wd.begin(), wd.end(), [](auto d) { return d == 0; }))
    throw DomainError("factor_count: pattern must contain a nonzero digit");
  const auto& vd = v.lsd_digits();
  const std::size_t mu = wd.size();
  Natural count = 0;
  for (std::size_t i = 0; i < vd.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < mu; ++k) {
      const unsigned digit = i + k < vd.size() ? vd[i + k] : 0u;
      if (digit != wd[k]) {
        match = false;
        break;
      }
    }
    count += match;
  }
  return count;
}

Natural factor_count(Natural n, const Word& w) { return factor_count(expand(n, w.base()), w); }

WordClass classify(const Word& w) {
  WordClass c{};
  if (w.empty()) return c;
  c.in_W_tilde = w.leading() != 0;
  c.in_W = c.in_W_tilde && w.length() >= 2 && w.trailing() != w.base() - 1;
  return c;
}

Truncations truncations(const Word& w) {
  const unsigned p = w.base();
  if (w.empty()) return {Word(p), Word(p), Word(p)};
  if (w.leading() == 0) throw DomainError("truncations: word " + w.str() + " starts with 0");
  const auto& d = w.lsd_digits();
  // Right truncation drops w_0.
  Word right = Word::from_lsd(p, std::vector<std::uint8_t>(d.begin() + 1, d.end()));
  // Left truncation drops the leading digit together with the zeros after it.
  std::size_t top = d.size() - 1;
  while (top > 0 && d[top - 1] == 0) --top;
  Word left = Word::from_lsd(p, std::vector<std::uint8_t>(d.begin(), d.begin() + top));
  Word left_right = truncations(left).right;
  return {std::move(left), std::move(right), std::move(left_right)};
}

std::vector<Word> enumerate_admissible_by_length(unsigned p, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t mu = 2; mu <= max_len; ++mu) {
    // Odometer over digits, most significant first, giving lexicographic order.
    std::vector<std::uint8_t> msd(mu, 0);
    msd[0] = 1;
    while (true) {
      if (msd[mu - 1] != p - 1) {
        std::vector<std::uint8_t> lsd(msd.rbegin(), msd.rend());
        out.push_back(Word::from_lsd(p, std::move(lsd)));
      }
      std::size_t i = mu;
      while (i-- > 0) {
        if (++msd[i] < p) break;
        msd[i] = 0;
        if (i == 0) break;
      }
      if (msd[0] == 0) break;
    }
  }
  return out;
}

std::vector<Word> enumerate_admissible(unsigned p, unsigned j) {
  if (!is_prime(p)) throw UsageError("p must be prime");
  return enumerate_admissible_by_length(p, static_cast<std::size_t>(j) + 1);
}

unsigned weight(const Word& w) {
  if (w.empty()) throw DomainError("weight of the empty word");
  return static_cast<unsigned>(w.length() - 1);
}

Word complement(const Word& w) {
  if (w.base() != 2) throw UsageError("complement is only defined for base 2");
  std::vector<std::uint8_t> d = w.lsd_digits();
  for (auto& x : d) x ^= 1u;
  return Word::from_lsd(2, std::move(d));
}

Word concat(const Word& high, const Word& low) {
  if (high.base() != low.base()) throw UsageError("concat: base mismatch");
  std::vector<std::uint8_t> d = low.lsd_digits();
  d.insert(d.end(), high.lsd_digits().begin(), high.lsd_digits().end());
  return Word::from_lsd(high.base(), std::move(d));
}

Word repeat(const Word& w, std::size_t k) {
  std::vector<std::uint8_t> d;
  d.reserve(w.length() * k);
  for (std::size_t i = 0; i < k; ++i) d.insert(d.end(), w.lsd_digits().begin(), w.lsd_digits().end());
  return Word::from_lsd(w.base(), std::move(d));
}

Word separator_word(const std::vector<unsigned>& a, unsigned ell, unsigned R, unsigned p) {
  const std::vector<Word> words = enumerate_admissible(p, ell);
  if (a.size() != words.size())
    throw UsageError("separator: expected " + std::to_string(words.size()) + " exponents");
  std::vector<std::uint8_t> sep_lsd(2 * ell, 0);
  for (unsigned i = ell; i < 2 * ell; ++i) sep_lsd[i] = static_cast<std::uint8_t>(p - 1);
  const Word sep = Word::from_lsd(p, sep_lsd);  // N^l 0^l
  Word out(p);
  // v_0 is least significant, so build from the top block downwards.
  for (std::size_t m = words.size(); m-- > 0;) {
    if (a[m] > R) throw UsageError("separator: exponent exceeds R");
    Word block = concat(repeat(concat(words[m], sep), a[m]), repeat(sep, R - a[m]));
    out = concat(out, block);
  }
  return out;
}

Natural separator_integer(const std::vector<unsigned>& a, unsigned ell, unsigned R, unsigned p) {
  return value(separator_word(a, ell, R, p));
}

}  // namespace ppk
