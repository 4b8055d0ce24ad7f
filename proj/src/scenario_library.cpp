#include "opineq/scenario.hpp"

namespace opineq {

namespace {

// Shorthands spliced into the documents below.
constexpr const char* kD12 = R"({"dim": 2, "eigenvalues": [1, 2], "interval": [1, 2]})";
constexpr const char* kEq2 = R"([0.7071067811865476, 0.7071067811865476])";

std::string fill(std::string text) {
  auto replace = [&](const std::string& key, const std::string& value) {
    for (std::size_t p = text.find(key); p != std::string::npos; p = text.find(key, p + value.size()))
      text.replace(p, key.size(), value);
  };
  replace("$D12", kD12);
  replace("$EQ2", kEq2);
  return text;
}

const char* const kDocuments[] = {
    // Čebyšev sign
    R"({"name": "cebysev_identity_operator", "theorem": "cebysev_sign",
        "f": {"kind": "identity"}, "g": {"kind": "identity"},
        "operator": {"dim": 2, "eigenvalues": [1, 1], "interval": [1, 1]}, "state": $EQ2,
        "expect": [{"verdict": "holds", "gap": 0}]})",
    R"({"name": "cebysev_identity_pair", "theorem": "cebysev_sign",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 2.5, "rhs": 2.25, "gap": 0.25}]})",
    R"({"name": "cebysev_inverse_pair_leq", "theorem": "cebysev_sign", "direction": "<=",
        "f": {"kind": "identity"}, "g": {"kind": "power", "p": -1}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 1, "rhs": 1.125, "gap": 0.125}]})",
    R"({"name": "cebysev_inverse_pair_geq_rejected", "theorem": "cebysev_sign", "direction": ">=",
        "f": {"kind": "identity"}, "g": {"kind": "power", "p": -1}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "hypothesis_not_met", "gap": -0.125}]})",
    R"({"name": "cebysev_refined_identity_pair", "theorem": "cebysev_refined",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 0.25, "rhs": 0, "gap": 0.25}]})",
    R"({"name": "cebysev_refined_inverse_pair_leq", "theorem": "cebysev_refined", "direction": "<=",
        "f": {"kind": "identity"}, "g": {"kind": "power", "p": -1}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": -0.125, "rhs": 0, "gap": 0.125}]})",

    // Pompeiu–Čebyšev sign
    R"({"name": "pc_squares_weight_identity", "theorem": "pc_sign",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 2}, "h": {"kind": "identity"},
        "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 21.25, "rhs": 20.25, "gap": 1}]})",
    R"({"name": "pc_all_equal", "theorem": "pc_sign",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "identity"},
        "operator": $D12, "state": $EQ2, "expect": [{"verdict": "holds", "gap": 0}]})",
    R"({"name": "pc_eigenvector_state", "theorem": "pc_sign",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 2}, "h": {"kind": "identity"},
        "operator": $D12, "state": [1, 0], "expect": [{"verdict": "holds", "gap": 0}]})",
    R"({"name": "pc_asynchronous_geq_rejected", "theorem": "pc_sign", "direction": ">=",
        "f": {"kind": "constant", "c": 1}, "g": {"kind": "identity"}, "h": {"kind": "power", "p": 0.5},
        "operator": {"dim": 2, "eigenvalues": [1, 4], "interval": [1, 4]}, "state": $EQ2,
        "expect": [{"verdict": "hypothesis_not_met", "lhs": 6.25, "rhs": 6.75, "gap": -0.5}]})",
    R"({"name": "pc_asynchronous_leq", "theorem": "pc_sign", "direction": "<=",
        "f": {"kind": "constant", "c": 1}, "g": {"kind": "identity"}, "h": {"kind": "power", "p": 0.5},
        "operator": {"dim": 2, "eigenvalues": [1, 4], "interval": [1, 4]}, "state": $EQ2,
        "expect": [{"verdict": "holds", "gap": 0.5}]})",
    R"({"name": "pc_mixed_pair_geq", "theorem": "pc_sign", "direction": ">=",
        "f": {"kind": "neg_parabola"}, "g": {"kind": "identity"}, "h": {"kind": "constant", "c": 1},
        "operator": {"dim": 2, "eigenvalues": [0.2, 0.8], "interval": [0.1, 0.9]}, "state": $EQ2,
        "expect": [{"verdict": "hypothesis_not_met"}]})",
    R"({"name": "pc_mixed_pair_leq", "theorem": "pc_sign", "direction": "<=",
        "f": {"kind": "neg_parabola"}, "g": {"kind": "identity"}, "h": {"kind": "constant", "c": 1},
        "operator": {"dim": 2, "eigenvalues": [0.2, 0.8], "interval": [0.1, 0.9]}, "state": $EQ2,
        "expect": [{"verdict": "hypothesis_not_met"}]})",
    R"({"name": "pc_unit_weight_is_cebysev", "theorem": "pc_sign",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "constant", "c": 1},
        "operator": $D12, "state": $EQ2, "expect": [{"verdict": "holds", "gap": 0.25}]})",

    // weighted Cauchy–Schwarz
    R"({"name": "pc_self_f_equals_h", "theorem": "pc_self",
        "f": {"kind": "identity"}, "h": {"kind": "identity"}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 6.25, "rhs": 6.25, "gap": 0}]})",
    R"({"name": "pc_self_sqrt", "theorem": "pc_self",
        "f": {"kind": "power", "p": 0.5}, "h": {"kind": "identity"}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 3.6642135623730945, "rhs": 3.75}]})",
    R"({"name": "pc_self_eigenvector", "theorem": "pc_self",
        "f": {"kind": "power", "p": 0.5}, "h": {"kind": "identity"}, "operator": $D12, "state": [0, 1],
        "expect": [{"verdict": "holds", "lhs": 8, "rhs": 8, "gap": 0}]})",
    R"({"name": "pc_self_inverse_sqrt_weight", "theorem": "pc_self",
        "f": {"kind": "power", "p": 0.5}, "h": {"kind": "power", "p": -0.5}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 1, "rhs": 1.125, "gap": 0.125}]})",

    // h(t) = t and g = 1 specializations
    R"({"name": "pc_identity_weight_powers", "theorem": "pc_sign_h_identity",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 3}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 41.25, "rhs": 38.25, "gap": 3}]})",
    R"({"name": "pc_unit_g_identity_weight_sqrt", "theorem": "pc_sign_g_one_h_identity",
        "f": {"kind": "power", "p": 0.5}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 3.017766952966369, "rhs": 2.8713203435596424}]})",
    R"({"name": "pc_unit_g_identity_weight_square_geq_rejected", "theorem": "pc_sign_g_one_h_identity",
        "direction": ">=", "f": {"kind": "power", "p": 2}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "hypothesis_not_met", "lhs": 6.25, "rhs": 6.75, "gap": -0.5}]})",
    R"({"name": "pc_unit_g_identity_weight_square_leq", "theorem": "pc_sign_g_one_h_identity",
        "direction": "<=", "f": {"kind": "power", "p": 2}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "gap": 0.5}]})",
    R"({"name": "pc_unit_g_inverse_square_weight", "theorem": "pc_sign_g_one",
        "f": {"kind": "power", "p": -1}, "h": {"kind": "power", "p": -2}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 0.3984375, "rhs": 0.3515625}]})",

    // Kantorovich
    R"({"name": "kantorovich_scalar_operator", "theorem": "kantorovich",
        "operator": {"dim": 2, "eigenvalues": [2, 2], "interval": [2, 2]}, "state": $EQ2,
        "expect": [{"report": "kantorovich_lower", "verdict": "holds", "gap": 0},
                   {"report": "kantorovich_upper", "verdict": "holds", "gap": 0}]})",
    R"({"name": "kantorovich_equal_weights", "theorem": "kantorovich", "operator": $D12, "state": $EQ2,
        "expect": [{"report": "kantorovich_lower", "verdict": "holds", "rhs": 1.125},
                   {"report": "kantorovich_upper", "verdict": "holds", "lhs": 1.125, "rhs": 1.125, "gap": 0}]})",
    R"({"name": "kantorovich_eigenvector", "theorem": "kantorovich", "operator": $D12, "state": [1, 0],
        "expect": [{"report": "kantorovich_lower", "verdict": "holds", "gap": 0},
                   {"report": "kantorovich_upper", "verdict": "holds", "gap": 0.125}]})",
    R"({"name": "kantorovich_declared_interval_too_narrow", "theorem": "kantorovich",
        "operator": $D12, "state": $EQ2, "declared_interval": [1.2, 1.8],
        "expect": [{"report": "kantorovich_lower", "verdict": "holds"},
                   {"report": "kantorovich_upper", "verdict": "violated", "gap": -0.08333333333333333}]})",

    // two operators
    R"({"name": "two_operator_same_pair", "theorem": "two_operator",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 2}, "h": {"kind": "identity"},
        "operator": $D12, "state": $EQ2, "operator_b": $D12, "state_b": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 42.5, "rhs": 40.5, "gap": 2}]})",
    R"({"name": "two_operator_powers", "theorem": "two_operator",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 2}, "h": {"kind": "identity"},
        "operator": $D12, "state": $EQ2,
        "operator_b": {"dim": 2, "eigenvalues": [1, 1.5], "interval": [1, 2]}, "state_b": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 21.390625, "rhs": 19.6875, "gap": 1.703125}]})",
    R"({"name": "two_operator_exponentials", "theorem": "two_operator",
        "f": {"kind": "exp"}, "g": {"kind": "exp"}, "h": {"kind": "power", "p": -1},
        "operator": $D12, "state": $EQ2,
        "operator_b": {"dim": 2, "eigenvalues": [1, 1.5], "interval": [1, 2]}, "state_b": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 30.970079200439002, "rhs": 18.295985593612112,
                    "gap": 12.67409360682689, "tol": 1e-11}]})",
    R"({"name": "two_operator_interval_mismatch", "theorem": "two_operator",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "identity"},
        "operator": $D12, "state": $EQ2,
        "operator_b": {"dim": 2, "eigenvalues": [1, 2], "interval": [1, 3]}, "state_b": $EQ2,
        "expect": [{"error": "IntervalMismatch"}]})",

    // refined forms
    R"({"name": "pc_refined_powers", "theorem": "pc_refined",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 3}, "h": {"kind": "identity"},
        "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": -1.125, "rhs": -5.765625, "gap": 4.640625}]})",
    R"({"name": "pc_refined_all_equal", "theorem": "pc_refined",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "identity"},
        "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": -0.625, "rhs": -0.625, "gap": 0}]})",
    R"({"name": "pc_refined_self_square", "theorem": "pc_refined_self",
        "f": {"kind": "power", "p": 2}, "h": {"kind": "identity"}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": -1.125, "rhs": -2.53125, "gap": 1.40625}]})",
    R"({"name": "pc_refined_self_identity_weight_square", "theorem": "pc_refined_self_h_identity",
        "f": {"kind": "power", "p": 2}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": -1.125, "rhs": -2.53125, "gap": 1.40625}]})",

    // scalar inverse pair
    R"({"name": "inverse_pair_identity", "theorem": "inverse_pair",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "constant", "c": 1},
        "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 2.8125, "rhs": 2.25, "gap": 0.5625}]})",
    R"({"name": "inverse_pair_identity_operator", "theorem": "inverse_pair",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "constant", "c": 1},
        "operator": {"dim": 2, "eigenvalues": [1, 1], "interval": [1, 1]}, "state": $EQ2,
        "expect": [{"verdict": "holds", "gap": 0}]})",
    R"({"name": "inverse_pair_self_square", "theorem": "inverse_pair_self",
        "f": {"kind": "power", "p": 2}, "h": {"kind": "identity"}, "operator": $D12, "state": $EQ2,
        "expect": [{"verdict": "holds", "lhs": 3.5595703125, "rhs": 2.84765625, "gap": 0.7119140625}]})",

    // ensembles
    R"({"name": "ensemble_two_blocks", "theorem": "ensemble_pc_sign",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 2}, "h": {"kind": "identity"},
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"verdict": "holds", "lhs": 21.25, "rhs": 20.25, "gap": 1}]})",
    R"({"name": "ensemble_single_operator", "theorem": "ensemble_pc_sign",
        "f": {"kind": "power", "p": 2}, "g": {"kind": "power", "p": 2}, "h": {"kind": "identity"},
        "ensemble": {"operators": [$D12], "states": [$EQ2]},
        "expect": [{"verdict": "holds", "gap": 1}]})",
    R"({"name": "ensemble_all_equal", "theorem": "ensemble_pc_sign",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "identity"},
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"verdict": "holds", "gap": 0}]})",
    R"({"name": "ensemble_interval_mismatch", "theorem": "ensemble_pc_sign",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "identity"},
        "ensemble": {"operators": [$D12, {"dim": 2, "eigenvalues": [3, 4], "interval": [3, 4]}],
                     "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"error": "IntervalMismatch"}]})",
    R"({"name": "ensemble_self_sqrt", "theorem": "ensemble_pc_self",
        "f": {"kind": "power", "p": 0.5}, "h": {"kind": "identity"},
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"verdict": "holds", "lhs": 3.75, "rhs": 3.6642135623730945}]})",
    R"({"name": "ensemble_self_identity_weight_square", "theorem": "ensemble_pc_self_h_identity",
        "f": {"kind": "power", "p": 2},
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"verdict": "holds", "lhs": 21.25, "rhs": 20.25, "gap": 1}]})",
    R"({"name": "ensemble_refined_cebysev", "theorem": "ensemble_pc_refined",
        "f": {"kind": "identity"}, "g": {"kind": "identity"}, "h": {"kind": "constant", "c": 1},
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"verdict": "holds", "lhs": 0.25, "rhs": 0, "gap": 0.25}]})",
    R"({"name": "ensemble_refined_self_square", "theorem": "ensemble_pc_refined_self",
        "f": {"kind": "power", "p": 2}, "h": {"kind": "identity"},
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"verdict": "holds", "lhs": -1.125, "rhs": -2.53125, "gap": 1.40625}]})",
    R"({"name": "ensemble_refined_self_identity_weight_square", "theorem": "ensemble_pc_refined_self_h_identity",
        "f": {"kind": "power", "p": 2},
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]]},
        "expect": [{"verdict": "holds", "lhs": -1.125, "rhs": -2.53125, "gap": 1.40625}]})",

    // ensemble inverse bound
    R"({"name": "ensemble_inverse_bound_sum_of_squares", "theorem": "ensemble_inverse_bound",
        "ensemble": {"operators": [{"dim": 2, "eigenvalues": [1, 1], "interval": [1, 1]},
                                   {"dim": 2, "eigenvalues": [1, 1], "interval": [1, 1]}],
                     "states": [[0.7071067811865476, 0], [0.7071067811865476, 0]],
                     "normalization": "sum_of_squares"},
        "expect": [{"verdict": "violated", "lhs": 4, "rhs": 1}]})",
    R"({"name": "ensemble_inverse_bound_per_vector", "theorem": "ensemble_inverse_bound",
        "ensemble": {"operators": [{"dim": 2, "eigenvalues": [1, 1], "interval": [1, 1]},
                                   {"dim": 2, "eigenvalues": [1, 1], "interval": [1, 1]}],
                     "states": [[1, 0], [1, 0]], "normalization": "per_vector"},
        "expect": [{"verdict": "holds", "lhs": 4, "rhs": 4, "gap": 0}]})",

    // ensemble Kantorovich chain
    R"({"name": "ensemble_chain_single_operator", "theorem": "ensemble_kantorovich_chain",
        "ensemble": {"operators": [$D12], "states": [$EQ2], "normalization": "per_vector"},
        "expect": [{"report": "ensemble_kantorovich_chain.lower", "verdict": "holds", "rhs": 1.125},
                   {"report": "ensemble_kantorovich_chain.middle", "verdict": "holds", "gap": 0},
                   {"report": "ensemble_kantorovich_chain.upper", "verdict": "holds", "gap": 0}]})",
    R"({"name": "ensemble_chain_scalar_operators", "theorem": "ensemble_kantorovich_chain",
        "ensemble": {"operators": [{"dim": 1, "eigenvalues": [2], "interval": [2, 2]},
                                   {"dim": 1, "eigenvalues": [2], "interval": [2, 2]}],
                     "states": [[1], [1]], "normalization": "per_vector"},
        "expect": [{"report": "ensemble_kantorovich_chain.lower", "verdict": "holds", "gap": 0},
                   {"report": "ensemble_kantorovich_chain.middle", "verdict": "holds", "gap": 0},
                   {"report": "ensemble_kantorovich_chain.upper", "verdict": "holds", "gap": 0}]})",
    R"({"name": "ensemble_chain_opposite_order", "theorem": "ensemble_kantorovich_chain",
        "ensemble": {"operators": [{"dim": 2, "eigenvalues": [1, 2], "interval": [1, 3]},
                                   {"dim": 2, "eigenvalues": [1, 3], "interval": [1, 3]}],
                     "states": [$EQ2, $EQ2], "normalization": "per_vector"},
        "intervals": [[1, 2], [1, 3]],
        "expect": [{"report": "ensemble_kantorovich_chain.lower", "verdict": "holds",
                    "rhs": 1.2395833333333333},
                   {"report": "ensemble_kantorovich_chain.middle", "verdict": "hypothesis_not_met",
                    "lhs": 1.2395833333333333, "rhs": 1.2291666666666667},
                   {"report": "ensemble_kantorovich_chain.upper", "verdict": "holds",
                    "lhs": 1.2291666666666667, "rhs": 1.2291666666666667}]})",
    R"({"name": "ensemble_chain_requires_unit_states", "theorem": "ensemble_kantorovich_chain",
        "ensemble": {"operators": [$D12, $D12], "states": [[0.5, 0.5], [0.5, 0.5]],
                     "normalization": "sum_of_squares"},
        "expect": [{"error": "NormalizationViolation"}]})",

    // discrete Chebyshev
    R"({"name": "discrete_chebyshev_increasing", "theorem": "discrete_chebyshev",
        "a": [1, 2, 3], "b": [1, 2, 3],
        "expect": [{"verdict": "holds", "lhs": 4.666666666666667, "rhs": 4, "gap": 0.6666666666666667}]})",
    R"({"name": "discrete_chebyshev_constant", "theorem": "discrete_chebyshev",
        "a": [2, 2, 2], "b": [1, 5, 9], "expect": [{"verdict": "holds", "gap": 0}]})",
    R"({"name": "discrete_chebyshev_opposite", "theorem": "discrete_chebyshev",
        "a": [1, 2], "b": [2, 1], "expect": [{"error": "NotSimilarlyOrdered"}]})",
};

}  // namespace

const std::vector<NamedScenario>& scenario_library() {
  static const std::vector<NamedScenario> library = [] {
    std::vector<NamedScenario> out;
    for (const char* text : kDocuments) {
      json doc = json::parse(fill(text));
      out.push_back({doc.at("name").get<std::string>(), std::move(doc)});
    }
    return out;
  }();
  return library;
}

}  // namespace opineq
