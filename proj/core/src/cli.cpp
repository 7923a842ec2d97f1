#include "weylcalc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "weylcalc/hull_oracle.hpp"
#include "weylcalc/json_io.hpp"
#include "weylcalc/momentum.hpp"
#include "weylcalc/tensor.hpp"

namespace weylcalc {

namespace {

class OracleMismatch : public std::runtime_error {
public:
    explicit OracleMismatch(const std::string& what) : std::runtime_error(what) {}
};

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed < 1) return fallback;
    return static_cast<int>(parsed);
}

struct Caps {
    int ambient;
    long long tensor_dim;
};

Caps read_caps() {
    return {env_cap("WEYLCALC_MAX_AMBIENT", 7),
            static_cast<long long>(env_cap("WEYLCALC_MAX_TENSOR_DIM", 1024))};
}

void check_ambient_cap(int n, const Caps& caps) {
    if (n > caps.ambient) {
        throw ResourceLimitError("ambient dimension " + std::to_string(n) + " exceeds cap " +
                                 std::to_string(caps.ambient));
    }
}

void check_tensor_cap(int n, int k, const Caps& caps) {
    long long dim = 1;
    for (int i = 0; i < k; ++i) {
        dim *= n;
        if (dim > caps.tensor_dim) {
            throw ResourceLimitError("tensor dimension n^k exceeds cap " +
                                     std::to_string(caps.tensor_dim));
        }
    }
}

// Compact reindexing: both weights moved onto 0..a-1 and 0..b-1. Hull
// membership depends only on value multisets, so this is harmless and keeps
// the oracle ambient small.
std::pair<RationalWeight, Weight> compactify(const RationalWeight& mu, const Weight& lambda) {
    RationalWeight m;
    int i = 0;
    for (const auto& [j, v] : mu.entries()) m.set(i++, v);
    Weight l;
    i = 0;
    for (const auto& [j, v] : lambda.entries()) l.set(i++, v);
    return {m, l};
}

void oracle_check_hull(const RationalWeight& mu, const Weight& lambda, const std::string& mode,
                       bool member, int ambient_override, const Caps& caps) {
    auto [m, l] = compactify(mu, lambda);
    int n = ambient_override > 0 ? ambient_override
                                 : m.support_size() + l.support_size();
    if (n < 1) n = 1;
    check_ambient_cap(n, caps);
    bool oracle_member;
    if (mode == "norm") {
        oracle_member = hull_member_bruteforce(embed(m, n), embed(RationalWeight(l), n));
    } else {
        oracle_member = weakstar_member_oracle(m, l, n);
    }
    if (oracle_member != member) {
        throw OracleMismatch("hull oracle disagrees: library=" + std::to_string(member) +
                             " oracle=" + std::to_string(oracle_member));
    }
}

Json signatures_json(const HullExtremeSet& set) {
    Json arr = Json::array();
    for (const OrbitSignature& s : set.signatures()) arr.push_back(signature_to_json(s));
    return arr;
}

Weight parse_weight(const std::string& text) {
    return weight_from_json(Json::parse(text));
}

RationalWeight parse_rweight(const std::string& text) {
    return rational_weight_from_json(Json::parse(text));
}

Matrix parse_matrix(const std::string& text, const Caps& caps) {
    Json j = Json::parse(text);
    if (j.is_object() && j.contains("n") && j.at("n").is_number_integer()) {
        check_ambient_cap(j.at("n").get<int>(), caps);
    }
    return matrix_from_json(j);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"weylcalc: exact Weyl-orbit hulls, Schur-Weyl decompositions, momentum sets"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, x_s, matrix_s, partition_s, out_path;
    std::string mode = "norm";
    int n_flag = -1, k_flag = -1;
    bool oracle = false;
    unsigned long seed = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_flag("--oracle", oracle, "cross-check the result with the brute-force oracle");
        sub->add_option("--seed", seed, "seed for any randomized verification");
        sub->add_option("--out", out_path, "write the JSON result to this file");
    };

    CLI::App* orbit_eq = app.add_subcommand("orbit-eq", "are two weights in the same Weyl orbit?");
    orbit_eq->add_option("--lambda", lambda_s)->required();
    orbit_eq->add_option("--mu", mu_s)->required();
    add_common(orbit_eq);

    CLI::App* hull = app.add_subcommand("hull", "hull membership test");
    hull->add_option("--lambda", lambda_s)->required();
    hull->add_option("--mu", mu_s)->required();
    hull->add_option("--mode", mode, "weakstar|norm")->check(CLI::IsMember({"weakstar", "norm"}));
    hull->add_option("--n", n_flag, "ambient dimension for the oracle");
    add_common(hull);

    CLI::App* extremes = app.add_subcommand("extremes", "extreme points of the orbit hull");
    extremes->add_option("--lambda", lambda_s)->required();
    extremes->add_option("--mode", mode, "weakstar|norm")
        ->check(CLI::IsMember({"weakstar", "norm"}));
    extremes->add_option("--n", n_flag, "ambient dimension for the oracle");
    add_common(extremes);

    CLI::App* separate = app.add_subcommand("separate", "separating certificate for two orbits");
    separate->add_option("--lambda", lambda_s)->required();
    separate->add_option("--mu", mu_s)->required();
    separate->add_option("--n", n_flag, "ambient dimension for the oracle");
    add_common(separate);

    CLI::App* support = app.add_subcommand("support", "support functional of the orbit hull");
    support->add_option("--lambda", lambda_s)->required();
    support->add_option("--x", x_s)->required();
    support->add_option("--n", n_flag, "ambient dimension for the oracle");
    add_common(support);

    CLI::App* decompose = app.add_subcommand("decompose", "Schur-Weyl decomposition of V^k");
    decompose->add_option("--n", n_flag)->required();
    decompose->add_option("--k", k_flag)->required();
    add_common(decompose);

    CLI::App* weights_of = app.add_subcommand("weights-of", "weight multiset of a Schur module");
    weights_of->add_option("--partition", partition_s)->required();
    weights_of->add_option("--n", n_flag)->required();
    add_common(weights_of);

    CLI::App* momentum_check =
        app.add_subcommand("momentum-check", "matrix-level momentum set membership");
    momentum_check->add_option("--lambda", lambda_s)->required();
    momentum_check->add_option("--matrix", matrix_s)->required();
    momentum_check->add_option("--mode", mode, "weakstar|norm")
        ->check(CLI::IsMember({"weakstar", "norm"}));
    momentum_check->add_option("--n", n_flag, "ambient dimension for the oracle");
    add_common(momentum_check);

    CLI::App* triple = app.add_subcommand("triple", "triple decomposition along D_lambda");
    triple->add_option("--lambda", lambda_s)->required();
    triple->add_option("--matrix", matrix_s)->required();
    add_common(triple);

    CLI::App* kaehler = app.add_subcommand("kaehler", "Kaehler form value on a raising matrix");
    kaehler->add_option("--lambda", lambda_s)->required();
    kaehler->add_option("--matrix", matrix_s)->required();
    add_common(kaehler);

    CLI::App* sk = app.add_subcommand("sk", "sum of the k largest eigenvalues");
    sk->add_option("--matrix", matrix_s)->required();
    sk->add_option("--k", k_flag)->required();
    add_common(sk);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "argument error: " << e.what() << "\n";
        return 2;
    }

    const Caps caps = read_caps();
    Json result;
    try {
        if (orbit_eq->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            Weight mu = parse_weight(mu_s);
            bool equal = orbit_equal(lambda, mu);
            if (oracle) {
                // Alternative route: compare full sorted value lists.
                bool direct = lambda.sorted_values() == mu.sorted_values();
                if (direct != equal) throw OracleMismatch("orbit-eq oracle disagrees");
            }
            result = Json{{"equal", equal}};
        } else if (hull->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            RationalWeight mu = parse_rweight(mu_s);
            bool member =
                mode == "norm" ? in_norm_hull(mu, lambda) : in_weakstar_hull(mu, lambda);
            if (oracle) oracle_check_hull(mu, lambda, mode, member, n_flag, caps);
            result = Json{{"member", member}};
        } else if (extremes->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            HullExtremeSet set = mode == "norm" ? extreme_points_norm_hull(lambda)
                                                : extreme_points_weakstar_hull(lambda);
            if (oracle) {
                if (mode == "weakstar") {
                    int n = n_flag > 0 ? n_flag : lambda.support_size() + 1;
                    check_ambient_cap(n, caps);
                    std::set<OrbitSignature> vertex_sigs;
                    for (const AmbientVector& v : polytope_vertices(lambda, n)) {
                        std::vector<long long> vals;
                        for (const Rat& r : v) {
                            if (r.get_den() != 1) throw OracleMismatch("non-integral vertex");
                            vals.push_back(static_cast<long long>(r.get_num().get_si()));
                        }
                        vertex_sigs.insert(canonicalize(Weight::from_values(vals)));
                    }
                    if (vertex_sigs != set.signatures()) {
                        throw OracleMismatch("weak-* extreme set disagrees with vertex enumeration");
                    }
                } else {
                    // Ext(co^n) = co^n intersect Ext(co): exactly one weak-*
                    // extreme signature keeps the full total.
                    HullExtremeSet weakstar_set = extreme_points_weakstar_hull(lambda);
                    for (const OrbitSignature& s : weakstar_set.signatures()) {
                        Weight rep = canonical_weight(s);
                        bool in_norm = in_norm_hull(RationalWeight(rep), lambda);
                        bool claimed = set.contains(s);
                        if (in_norm != claimed) {
                            throw OracleMismatch("norm extreme set disagrees with the face route");
                        }
                    }
                }
            }
            result = Json{{"signatures", signatures_json(set)}};
        } else if (separate->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            Weight mu = parse_weight(mu_s);
            SeparationCertificate cert = separating_vector(lambda, mu);
            if (oracle) {
                const Weight& outside =
                    cert.direction == SeparationDirection::OutsideCoLambda ? mu : lambda;
                const Weight& inside =
                    cert.direction == SeparationDirection::OutsideCoLambda ? lambda : mu;
                RationalWeight f = cert.evaluation_vector();
                Rat outside_value(0);
                for (const auto& [j, v] : f.entries()) {
                    outside_value += v * Rat(static_cast<long>(outside.at(j)));
                }
                if (outside_value - support_functional(inside, f) != cert.gap) {
                    throw OracleMismatch("separation certificate fails soundness");
                }
                auto [m, l] = compactify(RationalWeight(outside), inside);
                int n = n_flag > 0 ? n_flag : m.support_size() + l.support_size();
                if (n < 1) n = 1;
                check_ambient_cap(n, caps);
                if (weakstar_member_oracle(m, l, n)) {
                    throw OracleMismatch("claimed outside weight is a hull member");
                }
            }
            result = Json{
                {"direction", cert.direction == SeparationDirection::OutsideCoLambda
                                  ? "outside_co_lambda"
                                  : "lambda_outside_co_mu"},
                {"part", cert.on_minus_parts ? "minus" : "plus"},
                {"witness", rational_weight_to_json(cert.witness)},
                {"gap", to_string(cert.gap)},
            };
        } else if (support->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            RationalWeight x = parse_rweight(x_s);
            Rat value = support_functional(lambda, x);
            if (oracle) {
                int n = n_flag > 0 ? n_flag : x.support_end() + lambda.support_size();
                if (n < 1) n = 1;
                check_ambient_cap(n, caps);
                AmbientVector xv = embed(x, n);
                Rat best;
                bool first = true;
                for (const AmbientVector& w : weyl_orbit_vectors(lambda, n)) {
                    Rat dot(0);
                    for (int i = 0; i < n; ++i) dot += w[i] * xv[i];
                    if (first || dot > best) best = dot;
                    first = false;
                }
                if (best != value) throw OracleMismatch("support functional oracle disagrees");
            }
            result = Json{{"value", to_string(value)}};
        } else if (decompose->parsed()) {
            check_tensor_cap(n_flag, k_flag, caps);
            result = Json::array();
            for (const IsotypicComponent& c : schur_weyl_decompose(n_flag, k_flag)) {
                result.push_back(Json{{"partition", partition_to_json(c.partition)},
                                      {"dimS", c.dim_schur},
                                      {"dimM", c.dim_specht}});
            }
            if (oracle) {
                // Completeness and orthogonality of the projectors.
                GroupAlgebraElement sum(k_flag);
                for (const Partition& p : partitions(k_flag)) {
                    sum = sum + isotypic_projector(p, k_flag);
                }
                if (!(sum == GroupAlgebraElement::unit(k_flag))) {
                    throw OracleMismatch("projectors do not sum to the identity");
                }
            }
        } else if (weights_of->parsed()) {
            Partition p = partition_from_json(Json::parse(partition_s));
            check_tensor_cap(n_flag, p.sum(), caps);
            auto weights = weight_multiset(p, n_flag);
            if (oracle) {
                Weight lam = weight_of_partition(p);
                // Every reported weight must pass the majorization membership test.
                for (const auto& [w, mult] : weights) {
                    if (!in_norm_hull(RationalWeight(w), lam)) {
                        throw OracleMismatch("weight outside the norm hull");
                    }
                }
            }
            result = Json::array();
            for (const auto& [w, mult] : weights) {
                result.push_back(Json{{"weight", weight_to_json(w)}, {"multiplicity", mult}});
            }
        } else if (momentum_check->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            Matrix x = parse_matrix(matrix_s, caps);
            check_ambient_cap(x.size(), caps);
            bool member = mode == "norm" ? in_norm_momentum_set_matrix(x, lambda)
                                         : in_momentum_set_matrix(x, lambda);
            if (oracle) {
                oracle_check_hull(eigenvalue_weight(x), lambda, mode, member, n_flag, caps);
            }
            result = Json{{"member", member}};
        } else if (triple->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            Matrix x = parse_matrix(matrix_s, caps);
            TripleDecomposition td = triple_decompose(x, lambda);
            result = Json{{"lower", matrix_to_json(td.lower)},
                          {"block_diagonal", matrix_to_json(td.block_diagonal)},
                          {"upper", matrix_to_json(td.upper)}};
        } else if (kaehler->parsed()) {
            Weight lambda = parse_weight(lambda_s);
            Matrix z = parse_matrix(matrix_s, caps);
            result = Json{{"value", to_string(kaehler_value(lambda, z))}};
        } else if (sk->parsed()) {
            Matrix x = parse_matrix(matrix_s, caps);
            check_ambient_cap(x.size(), caps);
            SpectralSum s = spectral_s_k(x, k_flag);
            if (s.exact) {
                result = Json{{"value", to_string(s.value)}};
            } else {
                result = Json{{"lo", to_string(s.lo)}, {"hi", to_string(s.hi)}};
            }
        } else {
            err << "unknown subcommand\n";
            return 2;
        }
    } catch (const OracleMismatch& e) {
        err << "oracle mismatch: " << e.what() << "\n";
        return 4;
    } catch (const ResourceLimitError& e) {
        err << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string text = result.dump();
    if (!out_path.empty()) {
        std::ofstream file(out_path);
        if (!file) {
            err << "error: cannot write " << out_path << "\n";
            return 2;
        }
        file << text << "\n";
    } else {
        out << text << "\n";
    }
    return 0;
}

}  // namespace weylcalc
