#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "macd/kernel.hpp"

namespace macd {

struct SequenceFamily {
    std::map<std::pair<int, int>, Rational> a;  // (i, k) -> a_i(k)
    std::map<std::pair<int, int>, Rational> c;
    Rational b;

    const Rational& A(int i, int k) const;
    const Rational& C(int i, int k) const;
};

// a_i(k), c_i(k), b drawn for 0 <= i < n, 0 <= k <= window
SequenceFamily random_family(int n, int window, std::mt19937_64& rng);

// general inverse pair (determinant in f)
Rational general_f(const MultiIndex& m, const MultiIndex& k, const SequenceFamily& fam);
Rational general_g(const MultiIndex& k, const MultiIndex& l, const SequenceFamily& fam);
// the pair obtained after b -> infinity and a -> a + b/a, c -> c + b/c
Rational general_fC(const MultiIndex& m, const MultiIndex& k, const SequenceFamily& fam);
Rational general_gC(const MultiIndex& k, const MultiIndex& l, const SequenceFamily& fam);

// one-dimensional pairs on family row 0: with b, and the b -> infinity form
Rational kr_f1(int m, int k, const SequenceFamily& fam);
Rational kr_g1(int k, int l, const SequenceFamily& fam);
Rational kr_f2(int m, int k, const SequenceFamily& fam);
Rational kr_g2(int k, int l, const SequenceFamily& fam);
// a -> a + b/a, c -> c + b/c on every stored value
SequenceFamily shifted_family(const SequenceFamily& fam);

struct AParams {
    Rational q, t0;
    std::vector<Rational> t, u;  // t_1..t_n, u_1..u_n
};

struct CParams {
    Rational q, a;
    std::vector<Rational> t, u;
};

Rational corollary_A_f(const MultiIndex& m, const MultiIndex& k, const AParams& p);
Rational corollary_A_g(const MultiIndex& k, const MultiIndex& l, const AParams& p);
Rational corollary_C_f(const MultiIndex& m, const MultiIndex& k, const CParams& p);
// g with a u_i u_j q^{1+l_i+l_j}/t_j in the last denominator
Rational corollary_C_g(const MultiIndex& k, const MultiIndex& l, const CParams& p);
// g exactly as displayed, with a u_i u_j q^{l_i+l_j}/t_j there
Rational corollary_C_g_printed(const MultiIndex& k, const MultiIndex& l, const CParams& p);

AParams random_A_params(int n, std::mt19937_64& rng);
CParams random_C_params(int n, std::mt19937_64& rng);

// one-dimensional inverse pair built from the terminating 6phi5 sum
Rational bressoud_f(int m, int k, const Rational& a, const Rational& b, const Rational& q);
Rational bressoud_g(int k, int l, const Rational& a, const Rational& b, const Rational& q);

using Entry1 = std::function<Rational(int, int)>;
// true when f = alpha_m beta_k fB and g = gB/(beta_k alpha_l) on 0..window
// throws SingularError when a column-0 or diagonal entry vanishes
bool diagonally_equivalent(const Entry1& f, const Entry1& g, const Entry1& fB, const Entry1& gB, int window);

// Pieri coefficients d_{m-k} and recursion coefficients c_{k-l} as matrix
// entries, with u_i = U_i q^{k_i+|k|} t^{n-i}
Rational pieri_matrix_entry(const MultiIndex& m, const MultiIndex& k, const std::vector<Rational>& U,
                            const Rational& q, const Rational& t);
Rational recursion_matrix_entry(const MultiIndex& k, const MultiIndex& l, const std::vector<Rational>& U,
                                const Rational& q, const Rational& t);

using EntryFn = std::function<Rational(const MultiIndex&, const MultiIndex&)>;

struct EntryPair {
    EntryFn f, g;
    std::string label;
};

using EntryFactory = std::function<EntryPair(std::mt19937_64&)>;

struct Witness {
    MultiIndex m, l;
    int draw = 0;
    std::string relation;  // "fg" or "gf"
    Rational value;
};

struct VerificationReport {
    std::string name;
    int n = 0, window = 0, draws = 0;
    long checks = 0, failures = 0;
    int redraws = 0;
    std::vector<Witness> witnesses;
    bool passed() const { return failures == 0 && checks > 0; }
};

// both sum_{m>=k>=l} f_mk g_kl = delta_ml and the dual relation on [0,window]^n
VerificationReport verify_orthogonality(const EntryFactory& factory, int n, int window, int draws,
                                        std::uint64_t seed, const std::string& name = "");
VerificationReport verify_pair(const EntryPair& pair, int n, int window, int draw = 0);

enum class SumDirection { second_index, first_index };
using Sequence = std::map<MultiIndex, Rational>;

// second_index: b_m = sum_k f_mk a_k; first_index: b_k = sum_m f_mk a_m
Sequence inverse_relations_apply(SumDirection dir, const EntryFn& entries, const Sequence& seq, int n,
                                 int window);

struct InversePairSequences {
    Sequence a, b;
};

// sequences linked by the A-type pair through the multivariable 8phi7 sum
InversePairSequences an87_sequences(const AParams& p, const Rational& b, const Rational& d, int M, int window);

}  // namespace macd
