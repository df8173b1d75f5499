#pragma once

// Two closed formulas for the minimum crosscap number Cr(p,q) of a closed
// non-orientable surface embedded in the lens space L(p,q), p even. Both
// start from the standard expansion of p/q with q already folded into
// [1, p/2]; they agree with each other and with the length of the slope
// path through the tree (the oracle checks all three against BFS depth).

#include <utility>
#include <vector>

#include "lenscap/contfrac.hpp"
#include "lenscap/rational.hpp"

namespace lenscap {

struct BWTrace {
  ContFrac expansion;      // [a0, ..., an] of p/q_normalized
  std::vector<Int> b;      // b0 = a0, each bi in {ai, 0}
  Int total;               // (sum bi) / 2
};

// Front-to-back rule: bi = ai when the previous term was zeroed out
// (b_{i-1} != a_{i-1}) or the partial sum b0 + ... + b_{i-1} is odd,
// otherwise bi = 0. The final sum is even whenever p is.
inline BWTrace crosscap_bw(const LensParams& lens) {
  ExtRational x = ExtRational::reduce(lens.p, lens.q_normalized);
  ContFrac a = std_expand(x);
  std::vector<Int> b(a.terms.size());
  Int running = 0;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (i == 0) {
      b[i] = a.terms[i];
    } else if (b[i - 1] != a.terms[i - 1] || running % 2 != 0) {
      b[i] = a.terms[i];
    } else {
      b[i] = 0;
    }
    running += b[i];
  }
  if (running % 2 != 0) throw std::logic_error("crosscap_bw: odd b-sum for even p");
  return BWTrace{std::move(a), std::move(b), Int(running / 2)};
}

struct NewTrace {
  std::vector<Int> alpha;               // expansion as written, integer part first
  std::vector<ExtRational> alpha_prime; // recursion values, tail term first; entries are integers or 1/0
  std::vector<Int> beta;                // tail term first, beta_i = floor(alpha'_i / 2), 0 for 1/0
  Int total;
};

// Back-to-front rule over the expansion read from its last term: the first
// recursion value is the last term itself; afterwards the value is the raw
// term when the previous value was 1/0, the term plus one when the previous
// value was odd, and 1/0 when it was even. Each finite value v contributes
// floor(v / 2) crosscaps. For even p the recursion always terminates on an
// even or 1/0 value, never an odd one.
inline NewTrace crosscap_new(const LensParams& lens) {
  ExtRational x = ExtRational::reduce(lens.p, lens.q_normalized);
  ContFrac cf = std_expand(x);
  const std::size_t n = cf.terms.size();
  std::vector<ExtRational> ap(n);
  std::vector<Int> beta(n);
  Int total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Int& term = cf.terms[n - 1 - i];
    if (i == 0) {
      ap[i] = ExtRational::reduce(term, 1);
    } else if (ap[i - 1].is_infinity()) {
      ap[i] = ExtRational::reduce(term, 1);
    } else if (ap[i - 1].num() % 2 != 0) {
      ap[i] = ExtRational::reduce(term + 1, 1);
    } else {
      ap[i] = ExtRational::infinity();
    }
    beta[i] = ap[i].is_infinity() ? Int(0) : Int(ap[i].num() / 2);
    total += beta[i];
  }
  if (!ap.back().is_infinity() && ap.back().num() % 2 != 0) {
    throw std::logic_error("crosscap_new: recursion ended on an odd value for even p");
  }
  return NewTrace{cf.terms, std::move(ap), std::move(beta), std::move(total)};
}

}  // namespace lenscap
