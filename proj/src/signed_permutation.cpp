#include "bcell/signed_permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace bcell {

Rank::Rank(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) {
    throw ValidationError("rank " + std::to_string(n) + " outside 1.." + std::to_string(kMaxRank));
  }
}

std::string Generator::name() const {
  return index_ == 0 ? std::string("t") : "s" + std::to_string(index_);
}

std::vector<Generator> generators(int n) {
  std::vector<Generator> out;
  out.reserve(static_cast<std::size_t>(n));
  out.push_back(Generator::t());
  for (int i = 1; i < n; ++i) out.push_back(Generator::s(i));
  return out;
}

SignedPermutation SignedPermutation::identity(int n) {
  Rank r(n);
  SignedPermutation p;
  p.n_ = static_cast<std::int8_t>(r.value());
  for (int i = 0; i < n; ++i) p.w_[i] = static_cast<std::int8_t>(i + 1);
  return p;
}

SignedPermutation SignedPermutation::from_window(Rank rank, std::span<const int> entries) {
  const int n = rank.value();
  if (static_cast<int>(entries.size()) != n) {
    throw ValidationError("window has " + std::to_string(entries.size()) + " entries, expected " +
                          std::to_string(n));
  }
  std::array<bool, kMaxRank + 1> seen{};
  SignedPermutation p;
  p.n_ = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) {
    const int v = entries[i];
    const std::string where = "window position " + std::to_string(i + 1);
    if (v == 0) throw ValidationError(where + ": zero entry");
    if (std::abs(v) > n) throw ValidationError(where + ": value " + std::to_string(v) + " out of range");
    if (seen[std::abs(v)]) throw ValidationError(where + ": duplicate absolute value " + std::to_string(std::abs(v)));
    seen[std::abs(v)] = true;
    p.w_[i] = static_cast<std::int8_t>(v);
  }
  return p;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& rhs) const {
  if (n_ != rhs.n_) {
    throw RankMismatch("multiply: ranks " + std::to_string(n_) + " and " + std::to_string(rhs.n_));
  }
  SignedPermutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) p.w_[i] = static_cast<std::int8_t>((*this)(rhs.w_[i]));
  return p;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation p;
  p.n_ = n_;
  for (int i = 0; i < n_; ++i) {
    const int v = w_[i];
    p.w_[std::abs(v) - 1] = static_cast<std::int8_t>(v > 0 ? i + 1 : -(i + 1));
  }
  return p;
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n_; ++i) {
    if (w_[i] != i + 1) return false;
  }
  return true;
}

SignedPermutation generator_element(int n, Generator g) {
  if (g.index() < 0 || g.index() >= n) {
    throw ValidationError("generator " + g.name() + " not in W_" + std::to_string(n));
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  if (g.is_t()) {
    w[0] = -1;
  } else {
    std::swap(w[g.index() - 1], w[g.index()]);
  }
  return SignedPermutation::from_window(Rank(n), w);
}

SignedPermutation t_element(int n, int i) {
  if (i < 1 || i > n) throw ValidationError("t_" + std::to_string(i) + " not in W_" + std::to_string(n));
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  w[i - 1] = -i;
  return SignedPermutation::from_window(Rank(n), w);
}

SignedPermutation longest_element(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) w[k] = -(k + 1);
  return SignedPermutation::from_window(Rank(n), w);
}

SignedPermutation multiply(const SignedPermutation& x, const SignedPermutation& y) { return x * y; }

SignedPermutation inverse(const SignedPermutation& x) { return x.inverse(); }

SignedPermutation apply_generator(Generator g, const SignedPermutation& x, Side side) {
  const auto s = generator_element(x.rank(), g);
  return side == Side::left ? s * x : x * s;
}

LengthTriple length(const SignedPermutation& w) {
  // inv(w) minus the sum of the negative entries of the window
  const int n = w.rank();
  int inversions = 0;
  int negative_sum = 0;
  int negatives = 0;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++inversions;
    }
    if (w(i) < 0) {
      negative_sum -= w(i);
      ++negatives;
    }
  }
  LengthTriple out;
  out.ell = inversions + negative_sum;
  out.ell_t = negatives;
  out.ell_s = out.ell - out.ell_t;
  return out;
}

int ell_t(const SignedPermutation& w) {
  int negatives = 0;
  for (int i = 1; i <= w.rank(); ++i) negatives += w(i) < 0 ? 1 : 0;
  return negatives;
}

GeneratorSet descent_right(const SignedPermutation& w) {
  GeneratorSet out = 0;
  if (w(1) < 0) out |= 1U;
  for (int i = 1; i < w.rank(); ++i) {
    if (w(i) > w(i + 1)) out |= 1U << i;
  }
  return out;
}

GeneratorSet descent_left(const SignedPermutation& w) { return descent_right(w.inverse()); }

ExtendedDescents descent_extended_right(const SignedPermutation& w) {
  ExtendedDescents out;
  out.generators = descent_right(w);
  for (int i = 1; i <= w.rank(); ++i) {
    if (w(i) < 0) out.transpositions |= 1U << i;
  }
  return out;
}

ExtendedDescents descent_extended_left(const SignedPermutation& w) {
  return descent_extended_right(w.inverse());
}

int preferred_left_descent(const SignedPermutation& w) {
  const GeneratorSet d = descent_left(w);
  if (d == 0) return -1;
  for (int i = 0; i < w.rank(); ++i) {
    if ((d >> i) & 1U) return i;
  }
  return -1;
}

std::vector<Generator> reduced_word(const SignedPermutation& w) {
  std::vector<Generator> word;
  SignedPermutation x = w;
  for (int s = preferred_left_descent(x); s >= 0; s = preferred_left_descent(x)) {
    const Generator g = s == 0 ? Generator::t() : Generator::s(s);
    word.push_back(g);
    x = generator_element(x.rank(), g) * x;
  }
  return word;
}

SignedPermutation from_word(int n, std::span<const Generator> word) {
  SignedPermutation x = SignedPermutation::identity(n);
  for (Generator g : word) x = x * generator_element(n, g);
  return x;
}

bool bruhat_leq(const SignedPermutation& x, const SignedPermutation& y) {
  if (x.rank() != y.rank()) {
    throw RankMismatch("bruhat_leq: ranks " + std::to_string(x.rank()) + " and " +
                       std::to_string(y.rank()));
  }
  // If s y < y: x <= y iff min(x, s x) <= s y.
  SignedPermutation a = x;
  SignedPermutation b = y;
  const int n = x.rank();
  while (true) {
    if (ell(a) > ell(b)) return false;
    const int s = preferred_left_descent(b);
    if (s < 0) return a.is_identity();
    const auto g = generator_element(n, s == 0 ? Generator::t() : Generator::s(s));
    b = g * b;
    const auto ga = g * a;
    if (ell(ga) < ell(a)) a = ga;
  }
}

std::string format_window(const SignedPermutation& w) {
  std::string out;
  for (int i = 1; i <= w.rank(); ++i) {
    if (i > 1) out += ',';
    out += std::to_string(w(i));
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  int field = 1;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.remove_prefix(1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.remove_suffix(1);
    if (!item.empty() && item.front() == '+') item.remove_prefix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw ValidationError("window entry " + std::to_string(field) + ": cannot parse '" +
                            std::string(item) + "'");
    }
    values.push_back(value);
    pos = end + 1;
    ++field;
  }
  return values;
}

}  // namespace

SignedPermutation parse_window(Rank rank, std::string_view text) {
  const auto values = parse_int_list(text);
  return SignedPermutation::from_window(rank, values);
}

SignedPermutation parse_window(std::string_view text) {
  const auto values = parse_int_list(text);
  return SignedPermutation::from_window(Rank(static_cast<int>(values.size())), values);
}

std::string format_word(std::span<const Generator> word) {
  std::string out;
  for (Generator g : word) {
    if (!out.empty()) out += ' ';
    out += g.name();
  }
  return out;
}

std::vector<Generator> parse_word(int n, std::string_view text) {
  std::vector<Generator> word;
  std::size_t i = 0;
  auto skippable = [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '*' || c == '.' || c == '_' ||
           c == '{' || c == '}';
  };
  while (i < text.size()) {
    const char c = text[i];
    if (skippable(c)) {
      ++i;
    } else if (c == 't') {
      word.push_back(Generator::t());
      ++i;
    } else if (c == '1' || c == 'e') {
      ++i;  // identity token
    } else if (c == 's') {
      std::size_t j = i + 1;
      while (j < text.size() && skippable(text[j])) ++j;
      std::size_t k = j;
      while (k < text.size() && std::isdigit(static_cast<unsigned char>(text[k]))) ++k;
      if (k == j) throw ValidationError("word position " + std::to_string(i) + ": 's' without index");
      const int index = std::stoi(std::string(text.substr(j, k - j)));
      if (index < 1 || index >= n) {
        throw ValidationError("word position " + std::to_string(i) + ": s" + std::to_string(index) +
                              " not a generator of W_" + std::to_string(n));
      }
      word.push_back(Generator::s(index));
      i = k;
    } else {
      throw ValidationError("word position " + std::to_string(i) + ": unexpected '" +
                            std::string(1, c) + "'");
    }
  }
  return word;
}

}  // namespace bcell
