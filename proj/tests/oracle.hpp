#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library: plain long double continued fractions and textbook recursions.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace oracle {

using Digits = std::vector<int>;

// [0; d_0, d_1, …] truncated after `terms` digits of the periodic extension
// head·period·period·…, evaluated backwards.
inline long double tail_value(const Digits& head, const Digits& period, int terms = 200) {
  Digits seq = head;
  while (static_cast<int>(seq.size()) < terms && !period.empty()) {
    for (int d : period) seq.push_back(d);
  }
  long double x = 0;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) x = 1.0L / (*it + x);
  return x;
}

// λ_0 = a_0 + [0; a_1, …] + [0; a_{-1}, …], the two sides given outward.
inline long double lambda0(int a0, const Digits& right_head, const Digits& right_period, const Digits& left_head,
                           const Digits& left_period) {
  return a0 + tail_value(right_head, right_period) + tail_value(left_head, left_period);
}

// Markov value of the purely periodic …www…: max over the rotations.
inline long double periodic_markov(const Digits& w) {
  long double best = 0;
  std::size_t n = w.size();
  for (std::size_t k = 0; k < n; ++k) {
    Digits right, left;
    for (std::size_t j = 1; j <= n; ++j) right.push_back(w[(k + j) % n]);
    for (std::size_t j = 1; j <= n; ++j) left.push_back(w[(k + n * 4 - j) % n]);
    long double v = lambda0(w[k], {}, right, {}, left);
    if (v > best) best = v;
  }
  return best;
}

// Continuant by the three-term recurrence q_{j+1} = a_{j+1} q_j + q_{j-1}.
inline std::uint64_t continuant(const Digits& w) {
  std::uint64_t q_prev = 0, q = 1;
  for (int d : w) {
    std::uint64_t next = static_cast<std::uint64_t>(d) * q + q_prev;
    q_prev = q;
    q = next;
  }
  return q;
}

// Numerator p with p/q = [0; w].
inline std::uint64_t numerator(const Digits& w) {
  std::uint64_t p_prev = 1, p = 0;
  for (int d : w) {
    std::uint64_t next = static_cast<std::uint64_t>(d) * p + p_prev;
    p_prev = p;
    p = next;
  }
  return p;
}

// |I(w)| as the distance between the endpoints [0; w] and [0; w, 1].
inline long double cylinder_length(const Digits& w) {
  Digits w1 = w;
  w1.push_back(1);
  long double a = static_cast<long double>(numerator(w)) / continuant(w);
  long double b = static_cast<long double>(numerator(w1)) / continuant(w1);
  return std::fabs(a - b);
}

inline Digits parse(const std::string& s) {
  Digits out;
  for (char c : s) out.push_back(c - '0');
  return out;
}

inline Digits random_word(std::mt19937_64& rng, int lo, int hi, int len) {
  std::uniform_int_distribution<int> d(lo, hi);
  Digits w(len);
  for (int& x : w) x = d(rng);
  return w;
}

inline std::string to_string(const Digits& w) {
  std::string s;
  for (int d : w) s += static_cast<char>('0' + d);
  return s;
}

}  // namespace oracle
