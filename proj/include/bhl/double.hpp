#pragma once

#include "bhl/core.hpp"

namespace bhl {

// B and H acting on each other: act_BH: H (x) B -> B (left), act_HB: H (x) B -> H (right action of B on H,
// written with H first as it appears in the diagrams)
struct MatchedPairData {
    HopfPtr B, H;
    Morphism act_BH, act_HB;
};

MatchedPairData trivial_matched_pair(HopfPtr B, HopfPtr H);
Report check_matched_pair(const MatchedPairData& mp);
// B (x) H with the crossed product, codiagonal coproduct and antipode; throws not-matched
HopfPtr bicrossproduct(const MatchedPairData& mp, bool verify = true, std::string name = "");

struct DoubleData {
    HopfPtr D;        // on B (x) H, B = (H^op)* first
    HopfPtr H, B;
    MatchedPairData mp;
    Morphism iota_B, iota_H, pi_B, pi_H;
    LinMap r_matrix;  // element of D (x) D
};

// throws not-transparent-enough when Phi_{H,H} or Phi_{H,H*} is not symmetric
DoubleData drinfeld_double(HopfPtr H);
LinMap double_r_matrix(const DoubleData& D);

// S_{B><H}(1 (x) h) = 1 (x) S(h)
std::optional<Mismatch> check_1S(const DoubleData& D);
// factor embeddings are bialgebra maps and the coproduct is codiagonal on each factor
Report check_double_structure(const DoubleData& D);
// (1 (x) h)(f (x) 1) expanded through the two actions
std::optional<Mismatch> check_cross_relation(const DoubleData& D);

struct ZhangResult {
    std::vector<bool> conditions;  // the seven conditions, in order
    std::optional<std::pair<bool, bool>> transparency;  // (Phi_{H,X} symmetric, Phi_{H*,X} symmetric)
    Report report;
};
ZhangResult zhang_conditions(const HopfData& H, const Obj* X = nullptr);

struct CommutativityResult {
    bool d_commutative = false, factors_commutative = false, factors_cocommutative = false,
         d_cocommutative = false;
    Report report;
};
CommutativityResult commutativity_lemma(const DoubleData& D);

}  // namespace bhl
