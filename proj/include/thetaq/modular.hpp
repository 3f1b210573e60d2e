#pragma once

#include "thetaq/bigreal.hpp"
#include "thetaq/rational.hpp"

namespace thetaq {

/// The moduli feeding the odd-shift theta evaluation:
/// k11 = k, k12 = sqrt(1 - k11^2), k21 = (2 - k11^2 - 2 k12) / k11^2,
/// k22 = sqrt(1 - k21^2).
struct SingularChain {
  BigReal k11;
  BigReal k12;
  BigReal k21;
  BigReal k22;
};

/// Throws DomainError unless 0 < k < 1.
SingularChain singular_chain(const BigReal& k);

/// S_n(x) = k at n^2 k_i(x), for 0 < x < 1.
BigReal s_n(const BigReal& x, int n, int digits);

/// (1 - sqrt(1 - k^2)) / (1 + sqrt(1 - k^2)): k_r to k_{4r}.
BigReal landen_k4(const BigReal& k);

/// Positive root v of 16 u^8 + u^16 v^8 - v^16 = 0 at u = w:
/// (w^16 + w^4 sqrt(64 + w^24))^{1/8} / 2^{1/8}.
BigReal p2_A14(const BigReal& w);

/// 16 u^8 + u^16 v^8 - v^16.
BigReal modular_eq2_A14(const BigReal& u, const BigReal& v);

/// Q(x) = (4 (1 - x^2) / x)^{1/12}, the value of A(1,4) at modulus x.
BigReal q_a14(const BigReal& x);

/// |Q(S_2(x)) - P_2(Q(x))|.
BigReal check_theorem3_instance(const BigReal& x, int digits);

}  // namespace thetaq
