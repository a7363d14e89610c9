#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "spexlab/constructions.hpp"
#include "spexlab/extremal.hpp"
#include "spexlab/graph.hpp"

namespace spexlab {

enum class Verdict { pass, fail, out_of_range };

std::string to_string(Verdict v);

struct VerificationRecord {
    std::string claim;
    nlohmann::json parameters = nlohmann::json::object();
    Verdict verdict = Verdict::pass;
    nlohmann::json evidence = nlohmann::json::object();
    double runtime_seconds = 0.0;
};

/// Runtime is only written when `timing` is set, so default output is
/// reproducible byte for byte.
nlohmann::json to_json(const VerificationRecord& r, bool timing = false);

/// Claim ids understood by the verify front end, in suite order.
const std::vector<std::string>& claim_ids();
/// Maps a claim id or one of its accepted aliases to the claim id.
std::optional<std::string> resolve_claim(std::string_view id);

/// Every k_i >= 3: K_{kappa+1, kappa+t} contains the intersecting cycles.
VerificationRecord verify_containment_kab(const CycleSpec& spec);

/// k_t = 2: K^p_{t,2t+1} contains C_{4,...,4}. k_t >= 3: both
/// K^p_{kappa,kappa+t+1} and K^m_{kappa,kappa+t+1} contain the cycles.
VerificationRecord verify_almost_bipartite(const CycleSpec& spec);

/// Every F-free graph on 2..n_max vertices has sum of squared degrees
/// strictly below (4 kappa + t)(n - 1) n.
VerificationRecord verify_degree_squares(int n_max, const CycleSpec& spec, int workers = 0);

/// Random graphs with random (U, W) splits. Checks that a path on
/// 4 kappa + t vertices using only U-incident edges, or
/// 2 e(U) + e(U, W) above bipartition_edge_bound, forces a path system.
VerificationRecord verify_disjoint_paths(long trials, int n, const CycleSpec& spec, std::uint64_t seed);

/// One record per n: pass when the certified unique spectral extremal graph
/// is the predicted construction, out-of-range when it is not.
std::vector<VerificationRecord> verify_main_theorems(int n_lo, int n_hi, const CycleSpec& spec,
                                                     const SearchOptions& opt = {});

/// For each (n, spec): the predicted construction's spectral radius, taken
/// from its quotient matrix, lies between lambda(S_{n,kappa}) and
/// sqrt((4 kappa + t)(n - 1)).
VerificationRecord verify_lambda_bounds(const std::vector<std::pair<int, CycleSpec>>& grid);

/// The predicted construction on n <= 12 vertices has no minor isomorphic
/// to the intersecting cycles (at most 8 vertices).
VerificationRecord verify_minor_freeness(const CycleSpec& spec, int n);

/// Checks the hypotheses on h (connected, inside the intersecting cycles,
/// smallest color class kappa + 1, inside the construction) and, when they
/// hold, compares the spectral extremal graph with S_{n,kappa}.
VerificationRecord verify_small_subgraph(const Graph& h, const CycleSpec& spec, int n, const SearchOptions& opt = {});

/// Every claim at its default parameters, in claim_ids() order.
std::vector<VerificationRecord> run_default_suite(const SearchOptions& opt = {});

} // namespace spexlab
