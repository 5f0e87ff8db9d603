#include "ptelab/pte.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ptelab::pte {

bool PteSolution::operator==(const PteSolution& o) const {
    return x == o.x && y == o.y && degree == o.degree && max_degree == o.max_degree &&
           ideal == o.ideal && provenance == o.provenance;
}

std::vector<Int> power_sums(const std::vector<std::int64_t>& v, int m) {
    if (m < 0) throw std::invalid_argument("power_sums: negative degree");
    std::vector<Int> out(static_cast<std::size_t>(m), Int(0));
    for (std::int64_t e : v) {
        Int base(static_cast<long>(e));
        Int pw(1);
        for (int j = 1; j <= m; ++j) {
            pw *= base;
            out[static_cast<std::size_t>(j - 1)] += pw;
        }
    }
    return out;
}

bool is_trivial(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
    if (x.size() != y.size()) return false;
    auto a = x, b = y;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

VerifyResult verify(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y,
                    int m) {
    if (x.size() != y.size()) throw std::invalid_argument("verify: size mismatch");
    if (m < 0) throw std::invalid_argument("verify: negative degree");
    VerifyResult res;
    res.trivial = is_trivial(x, y);
    if (res.trivial) {
        res.ok = true;
        res.max_degree = m;  // callers must consult the trivial flag
        return res;
    }
    int size = static_cast<int>(x.size());
    // A non-trivial pair must disagree by degree = size; scanning further
    // would contradict the size bound.
    int scan = std::max(m, size);
    auto px = power_sums(x, scan);
    auto py = power_sums(y, scan);
    int agree = 0;
    while (agree < scan && px[static_cast<std::size_t>(agree)] ==
                               py[static_cast<std::size_t>(agree)])
        ++agree;
    if (agree >= size)
        throw std::logic_error("verify: non-trivial pair agrees through its size");
    res.max_degree = agree;
    res.ok = agree >= m;
    return res;
}

std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>> canonical_form(
    std::vector<std::int64_t> x, std::vector<std::int64_t> y) {
    if (x.empty() || y.empty())
        throw std::invalid_argument("canonical_form: empty list");
    std::sort(x.begin(), x.end(), std::greater<>());
    std::sort(y.begin(), y.end(), std::greater<>());
    std::int64_t lo = std::min(x.back(), y.back());
    for (auto& v : x) v -= lo;
    for (auto& v : y) v -= lo;
    if (std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end())) x.swap(y);
    return {std::move(x), std::move(y)};
}

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
    Clock::time_point start = Clock::now();
    int budget_seconds = 0;

    void check(const char* who) const {
        if (budget_seconds <= 0) return;
        auto elapsed =
            std::chrono::duration_cast<std::chrono::seconds>(Clock::now() - start).count();
        if (elapsed > budget_seconds)
            throw BudgetExceeded(std::string(who) + ": time budget exceeded");
    }
};

// Weakly decreasing tuples of the given size over [-bound, bound] whose
// leading (largest) entry is fixed; the canonical multiset enumeration.
void enumerate_with_leading(int size, int bound, std::int64_t leading,
                            const std::function<void(const std::vector<std::int64_t>&)>& emit) {
    std::vector<std::int64_t> cur(static_cast<std::size_t>(size));
    cur[0] = leading;
    auto rec = [&](auto&& self, int pos, std::int64_t max_allowed) -> void {
        if (pos == size) {
            emit(cur);
            return;
        }
        for (std::int64_t v = max_allowed; v >= -bound; --v) {
            cur[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 1, leading);
}

std::uint64_t multiset_count(int size, int bound) {
    // Multisets of the given size over 2*bound+1 values.
    Int c = binomial(static_cast<unsigned long>(2 * bound + size),
                     static_cast<unsigned long>(size));
    if (!c.fits_ulong_p()) return UINT64_MAX;
    return c.get_ui();
}

std::vector<PteSolution> assemble_solutions(
    const std::map<std::vector<Int>, std::vector<std::vector<std::int64_t>>, IntVecLess>&
        groups,
    int size, int degree) {
    // Distinct descending tuples are distinct multisets, so any same-key
    // pair is automatically non-trivial.
    std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, PteSolution>
        dedup;
    for (const auto& [key, members] : groups) {
        (void)key;
        if (members.size() < 2) continue;
        for (std::size_t a = 0; a + 1 < members.size(); ++a)
            for (std::size_t b = a + 1; b < members.size(); ++b) {
                auto canon = canonical_form(members[a], members[b]);
                if (dedup.count(canon)) continue;
                PteSolution sol;
                sol.x = canon.first;
                sol.y = canon.second;
                sol.degree = degree;
                auto ver = verify(sol.x, sol.y, degree);
                if (!ver.ok || ver.trivial)
                    throw std::logic_error("brute_search: grouped pair fails verification");
                sol.max_degree = ver.max_degree;
                sol.ideal = ver.max_degree == size - 1;
                dedup.emplace(std::move(canon), std::move(sol));
            }
    }
    std::vector<PteSolution> out;
    out.reserve(dedup.size());
    for (auto& [key, sol] : dedup) {
        (void)key;
        out.push_back(std::move(sol));
    }
    return out;
}

void brute_check_args(int size, int degree, int bound, const SearchOptions& opts,
                      const char* who) {
    if (size < 1) throw std::invalid_argument(std::string(who) + ": size must be >= 1");
    if (degree < 1) throw std::invalid_argument(std::string(who) + ": degree must be >= 1");
    if (bound < 0) throw std::invalid_argument(std::string(who) + ": negative bound");
    if (multiset_count(size, bound) > opts.max_candidates)
        throw BudgetExceeded(std::string(who) + ": candidate budget exceeded");
}

}  // namespace

std::vector<PteSolution> brute_search_serial(int size, int degree, int bound,
                                             const SearchOptions& opts) {
    brute_check_args(size, degree, bound, opts, "brute_search_serial");
    Deadline deadline{Clock::now(), opts.time_budget_seconds};
    std::map<std::vector<Int>, std::vector<std::vector<std::int64_t>>, IntVecLess> groups;
    for (std::int64_t lead = bound; lead >= -bound; --lead) {
        enumerate_with_leading(size, bound, lead,
                               [&](const std::vector<std::int64_t>& tuple) {
                                   groups[power_sums(tuple, degree)].push_back(tuple);
                               });
        deadline.check("brute_search_serial");
    }
    return assemble_solutions(groups, size, degree);
}

std::vector<PteSolution> brute_search(int size, int degree, int bound,
                                      const SearchOptions& opts) {
    brute_check_args(size, degree, bound, opts, "brute_search");
    Deadline deadline{Clock::now(), opts.time_budget_seconds};
    int leads = 2 * bound + 1;
    // Keyed batches per leading entry; index-addressed so the merge order
    // is the serial enumeration order regardless of thread scheduling.
    std::vector<std::vector<std::pair<std::vector<Int>, std::vector<std::int64_t>>>> batches(
        static_cast<std::size_t>(leads));
#ifdef PTELAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int li = 0; li < leads; ++li) {
        std::int64_t lead = bound - li;
        auto& local = batches[static_cast<std::size_t>(li)];
        enumerate_with_leading(size, bound, lead,
                               [&](const std::vector<std::int64_t>& tuple) {
                                   local.emplace_back(power_sums(tuple, degree), tuple);
                               });
    }
    deadline.check("brute_search");
    std::map<std::vector<Int>, std::vector<std::vector<std::int64_t>>, IntVecLess> groups;
    for (auto& batch : batches)
        for (auto& [key, tuple] : batch) groups[std::move(key)].push_back(std::move(tuple));
    return assemble_solutions(groups, size, degree);
}

bool theorem29_validate(int size, int bound, const SearchOptions& opts) {
    return brute_search(size, size, bound, opts).empty();
}

Extraction extract_from_collision(int n, int k, const weights::FundWeight& nu,
                                  const weights::IndexSet& I, const weights::IndexSet& J) {
    if (nu.rank_n() != n || I.rank_n() != n || J.rank_n() != n)
        throw std::invalid_argument("extract_from_collision: rank mismatch");
    if (I.k() != k || J.k() != k)
        throw std::invalid_argument("extract_from_collision: subset size mismatch");
    if (I == J) throw std::invalid_argument("extract_from_collision: need I != J");

    weights::YoungPattern base = nu.pattern();
    auto pi = weights::add_lambda_I(base, I);
    auto pj = weights::add_lambda_I(base, J);
    if (!pi.dominant || !pj.dominant)
        throw std::domain_error("extract_from_collision: constituent not dominant");

    Extraction ex;
    ex.r = I.intersect_size(J);
    for (int i : I.minus(J)) ex.x.push_back(base.row(i) - i);
    for (int j : J.minus(I)) ex.y.push_back(base.row(j) - j);

    // First S-functional disagreement: agreement through S_{q} for all
    // q <= s+1 certifies degree s. Disjoint index lists on a strictly
    // injective row-minus-index map force a disagreement by q = size + 1.
    int size = k - ex.r;
    int cap = size + 2;
    int first_disagree = -1;
    for (int q = 2; q <= cap; ++q) {
        if (weights::s_functional(pi.pattern, q) != weights::s_functional(pj.pattern, q)) {
            first_disagree = q;
            break;
        }
    }
    if (first_disagree < 0)
        throw std::logic_error("extract_from_collision: no S-functional disagreement found");
    ex.guaranteed_degree = first_disagree - 2;

    auto ver = verify(ex.x, ex.y, ex.guaranteed_degree);
    if (!ver.ok || ver.trivial)
        throw std::logic_error("extract_from_collision: extraction failed self-check");
    return ex;
}

namespace {

nlohmann::json solution_json(const PteSolution& s) {
    nlohmann::json j;
    j["X"] = s.x;
    j["Y"] = s.y;
    j["size"] = s.size();
    j["degree"] = s.degree;
    j["max_degree"] = s.max_degree;
    j["ideal"] = s.ideal;
    if (s.provenance) {
        nlohmann::json p;
        p["nu"] = s.provenance->nu;
        p["I"] = s.provenance->I;
        p["J"] = s.provenance->J;
        j["provenance"] = p;
    } else {
        j["provenance"] = "brute";
    }
    return j;
}

PteSolution solution_from(const nlohmann::json& j) {
    PteSolution s;
    try {
        s.x = j.at("X").get<std::vector<std::int64_t>>();
        s.y = j.at("Y").get<std::vector<std::int64_t>>();
        s.degree = j.at("degree").get<int>();
        s.max_degree = j.at("max_degree").get<int>();
        s.ideal = j.at("ideal").get<bool>();
        const auto& p = j.at("provenance");
        if (p.is_string()) {
            if (p.get<std::string>() != "brute")
                throw std::invalid_argument("solution record: unknown provenance string");
        } else {
            WeightProvenance wp;
            wp.nu = p.at("nu").get<std::vector<std::int64_t>>();
            wp.I = p.at("I").get<std::vector<int>>();
            wp.J = p.at("J").get<std::vector<int>>();
            s.provenance = std::move(wp);
        }
        if (j.at("size").get<int>() != s.size())
            throw std::invalid_argument("solution record: size field mismatch");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("solution record: bad field: ") + e.what());
    }
    return s;
}

struct CheckpointState {
    std::int64_t completed_leading = 0;
    std::vector<PteSolution> solutions;
};

void write_checkpoint(const std::string& path, int k, std::int64_t bound,
                      const CheckpointState& st) {
    nlohmann::json j;
    j["k"] = k;
    j["bound"] = bound;
    j["completed_leading"] = st.completed_leading;
    auto arr = nlohmann::json::array();
    for (const auto& s : st.solutions) arr.push_back(solution_json(s));
    j["solutions"] = arr;
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw std::runtime_error("ideal_search: cannot write checkpoint " + path);
    out << j.dump() << '\n';
}

std::optional<CheckpointState> read_checkpoint(const std::string& path, int k,
                                               std::int64_t bound) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded())
        throw std::invalid_argument("ideal_search: malformed checkpoint " + path);
    CheckpointState st;
    try {
        if (j.at("k").get<int>() != k || j.at("bound").get<std::int64_t>() != bound)
            throw std::invalid_argument("ideal_search: checkpoint parameters do not match");
        st.completed_leading = j.at("completed_leading").get<std::int64_t>();
        for (const auto& rec : j.at("solutions")) st.solutions.push_back(solution_from(rec));
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("ideal_search: bad checkpoint field: ") +
                                    e.what());
    }
    return st;
}

}  // namespace

IdealSearchResult ideal_search(int k, std::int64_t nu_coeff_bound,
                               const IdealSearchOptions& opts) {
    if (k < 2) throw std::invalid_argument("ideal_search: need k >= 2");
    if (nu_coeff_bound < 1)
        throw std::invalid_argument("ideal_search: empty coefficient range");
    int n = 2 * k;
    int positions = n - 1;

    // Weight-space budget: bound^(n-1) candidate weights.
    {
        Int total = int_pow(Int(static_cast<long>(nu_coeff_bound)),
                            static_cast<unsigned long>(positions));
        if (!total.fits_ulong_p() || total.get_ui() > opts.search.max_candidates)
            throw BudgetExceeded("ideal_search: weight budget exceeded");
    }

    Deadline deadline{Clock::now(), opts.search.time_budget_seconds};
    IdealSearchResult result;

    // Dedup map ordered by canonical pair; first insertion wins, and the
    // scan order (weights lex, collisions lex) makes that deterministic.
    std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, PteSolution>
        dedup;

    std::int64_t start_leading = 1;
    if (!opts.checkpoint_path.empty()) {
        if (auto st = read_checkpoint(opts.checkpoint_path, k, nu_coeff_bound)) {
            result.resumed = true;
            start_leading = st->completed_leading + 1;
            for (auto& s : st->solutions) {
                auto key = std::make_pair(s.x, s.y);
                dedup.emplace(std::move(key), std::move(s));
            }
        }
    }

    // Suffixes of the coefficient odometer (positions after the leading one).
    std::vector<std::vector<std::int64_t>> suffixes;
    {
        std::vector<std::int64_t> cur(static_cast<std::size_t>(positions - 1), 1);
        auto rec = [&](auto&& self, int pos) -> void {
            if (pos == positions - 1) {
                suffixes.push_back(cur);
                return;
            }
            for (std::int64_t v = 1; v <= nu_coeff_bound; ++v) {
                cur[static_cast<std::size_t>(pos)] = v;
                self(self, pos + 1);
            }
        };
        rec(rec, 0);
    }

    struct Found {
        std::vector<std::int64_t> nu;
        separation::Collision collision;
        Extraction extraction;
    };

    for (std::int64_t lead = start_leading; lead <= nu_coeff_bound; ++lead) {
        std::vector<std::vector<Found>> per_suffix(suffixes.size());
        // Exceptions must not unwind out of the parallel region; they are
        // captured per suffix and rethrown below, disjointness violations
        // loudest and first.
        std::vector<std::string> corollary_failures(suffixes.size());
        std::vector<std::string> failures(suffixes.size());
#ifdef PTELAB_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
        for (std::size_t si = 0; si < suffixes.size(); ++si) {
            try {
                std::vector<std::int64_t> coeffs;
                coeffs.reserve(static_cast<std::size_t>(positions));
                coeffs.push_back(lead);
                coeffs.insert(coeffs.end(), suffixes[si].begin(), suffixes[si].end());
                weights::FundWeight nu(n, coeffs);
                for (auto& col : separation::find_collisions(n, k, nu, k)) {
                    if (col.I.intersect_size(col.J) != 0) {
                        corollary_failures[si] =
                            "depth-k collision with overlapping index sets at nu=" +
                            nu.to_string() + " I=" + col.I.to_string() +
                            " J=" + col.J.to_string();
                        break;
                    }
                    Extraction ex = extract_from_collision(n, k, nu, col.I, col.J);
                    per_suffix[si].push_back(Found{coeffs, std::move(col), std::move(ex)});
                }
            } catch (const std::exception& e) {
                failures[si] = e.what();
            }
        }
        for (const auto& f : corollary_failures)
            if (!f.empty()) throw CorollaryViolation("ideal_search: " + f);
        for (const auto& f : failures)
            if (!f.empty()) throw std::runtime_error("ideal_search: " + f);

        for (std::size_t si = 0; si < suffixes.size(); ++si) {
            ++result.weights_scanned;
            for (auto& found : per_suffix[si]) {
                ++result.collisions_found;
                const Extraction& ex = found.extraction;
                if (ex.r != 0)
                    throw CorollaryViolation("ideal_search: extraction reports overlap");
                if (ex.guaranteed_degree < k - 1)
                    throw std::logic_error("ideal_search: collision below ideal degree");
                auto ver = verify(ex.x, ex.y, k - 1);
                if (!ver.ok || ver.trivial || ver.max_degree != k - 1)
                    throw std::logic_error("ideal_search: extraction not ideal");
                auto canon = canonical_form(ex.x, ex.y);
                if (dedup.count(canon)) continue;
                PteSolution sol;
                sol.x = canon.first;
                sol.y = canon.second;
                sol.degree = k - 1;
                sol.max_degree = ver.max_degree;
                sol.ideal = true;
                WeightProvenance prov;
                prov.nu = found.nu;
                prov.I = found.collision.I.elems();
                prov.J = found.collision.J.elems();
                sol.provenance = std::move(prov);
                dedup.emplace(std::move(canon), std::move(sol));
            }
        }

        if (!opts.checkpoint_path.empty()) {
            CheckpointState st;
            st.completed_leading = lead;
            for (const auto& [key, sol] : dedup) {
                (void)key;
                st.solutions.push_back(sol);
            }
            write_checkpoint(opts.checkpoint_path, k, nu_coeff_bound, st);
        }
        deadline.check("ideal_search");
    }

    for (auto& [key, sol] : dedup) {
        (void)key;
        result.solutions.push_back(std::move(sol));
    }
    return result;
}

std::string solution_to_json(const PteSolution& s) { return solution_json(s).dump(); }

PteSolution solution_from_json(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object())
        throw std::invalid_argument("solution_from_json: malformed record");
    return solution_from(j);
}

std::string solution_to_text(const PteSolution& s) {
    std::ostringstream os;
    auto list = [&](const std::vector<std::int64_t>& v) {
        os << '(';
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ',';
            os << v[i];
        }
        os << ')';
    };
    os << "X=";
    list(s.x);
    os << " Y=";
    list(s.y);
    os << " size=" << s.size() << " degree=" << s.degree << " max_degree=" << s.max_degree
       << (s.ideal ? " ideal" : "");
    if (s.provenance) {
        os << " nu=[";
        for (std::size_t i = 0; i < s.provenance->nu.size(); ++i) {
            if (i) os << ',';
            os << s.provenance->nu[i];
        }
        os << "] I={";
        for (std::size_t i = 0; i < s.provenance->I.size(); ++i) {
            if (i) os << ',';
            os << s.provenance->I[i];
        }
        os << "} J={";
        for (std::size_t i = 0; i < s.provenance->J.size(); ++i) {
            if (i) os << ',';
            os << s.provenance->J[i];
        }
        os << '}';
    } else {
        os << " provenance=brute";
    }
    return os.str();
}

}  // namespace ptelab::pte
