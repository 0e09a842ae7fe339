#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "kprod/connectivity.hpp"
#include "kprod/graph.hpp"
#include "kprod/random.hpp"
#include "kprod/report.hpp"

namespace kprod {

/// The closed form min{nκ(G), (n-1)δ(G)} only holds for n >= 3.
class FormulaInapplicable : public std::domain_error {
public:
    explicit FormulaInapplicable(int n);
    int n() const noexcept { return n_; }

private:
    int n_;
};

/// Which term of min{nκ, (n-1)δ} attains the minimum.
enum class Branch { copy, neighborhood, tie };

const char* to_string(Branch b);

struct FormulaResult {
    int n = 0;
    int kappa_g = 0;
    int delta_g = 0;
    std::int64_t copy_term = 0;          // n·κ(G)
    std::int64_t neighborhood_term = 0;  // (n-1)·δ(G)
    std::int64_t value = 0;
    Branch binding_branch = Branch::tie;
};

/// Exact evaluation of min{n·κ, (n-1)·δ}. Throws FormulaInapplicable for n < 3.
FormulaResult formula_kappa_product(int kappa_g, int delta_g, int n);

/// κ(G × K_n) from the factor alone; the product is never built.
int kappa_product_fast(const Graph& g, int n);

/// A separator of G × K_n of size exactly min{nκ, (n-1)δ}, in the product's
/// row-major labelling. Copy branch: C × V(K_n) for the minimum cut C of G.
/// Neighbourhood branch (also on ties): the open neighbourhood of
/// (u, v_0) for the smallest min-degree vertex u. Needs n >= 3 and G
/// connected with at least 2 vertices.
CutWitness witness_cut(const Graph& g, int n);

/// Raised when a candidate separator breaks a precondition of the quotient
/// construction; `condition()` is 0 for κ(G) = 0, else 1 or 2.
class ConditionViolation : public GraphError {
public:
    ConditionViolation(int condition, const std::string& what) : GraphError(what), condition_(condition) {}
    int condition() const noexcept { return condition_; }

private:
    int condition_;
};

/// G*: one vertex per layer remainder S'_i = S_i - S, adjacent when some edge
/// of G × K_n - S joins the two remainders.
struct QuotientGraph {
    int n = 0;
    std::vector<Vertex> separator;                // S, sorted product indices
    std::vector<std::vector<Vertex>> remainders;  // S'_i, product indices
    Graph graph;
};

/// Requires n >= 3, κ(G) > 0, |S| < min{nκ, (n-1)δ} and every S'_i nonempty.
QuotientGraph build_quotient(const Graph& g, int n, std::span<const Vertex> separator);

/// Draws S satisfying both quotient preconditions: size uniform in
/// [0, formula - 1], members uniform without replacement, rejecting members
/// that would empty a layer; 100 rejections restart with a fresh size.
/// Needs κ(G) > 0 and n >= 3.
std::vector<Vertex> sample_valid_separator(const Graph& g, int n, Rng& rng);

/// How κ of a constructed product is computed in equality checks.
enum class DirectOracle { flow, brute, both };

VerificationReport check_theorem_equality(const Graph& g, int n, DirectOracle oracle = DirectOracle::flow,
                                          int brute_cap = kDefaultBruteForceCap);
VerificationReport check_witness_soundness(const Graph& g, int n);
VerificationReport check_lemma_quotient_connected(const Graph& g, int n, std::span<const Vertex> separator);
VerificationReport check_lemma_layer_in_component(const Graph& g, int n, std::span<const Vertex> separator);

/// δ(G-u) >= δ(G) - 1 and κ(G-u) >= κ(G) - 1 for every vertex u. Needs |G| >= 2.
VerificationReport check_deletion_bounds(const Graph& g);

/// κ(K_m × K_n) against (m-1)(n-1) and the closed form. Needs n >= m >= 2, n >= 3.
VerificationReport check_special_cases(int m, int n);

/// Flow κ against brute_force_kappa on the same graph.
VerificationReport check_oracle_equivalence(const Graph& g, int cap = kDefaultBruteForceCap);

}  // namespace kprod
