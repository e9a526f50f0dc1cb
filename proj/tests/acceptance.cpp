// Acceptance suite: one PASS/FAIL line per criterion. Exit status 1 if any criterion fails.
#include "golden.hpp"

#include "aspdp/bench.hpp"
#include "aspdp/oracle.hpp"
#include "aspdp/solver.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

using namespace testing;

namespace {

// Tolerances and budgets.
constexpr double kExampleBudgetS = 1.0;
constexpr double kGoldenBudgetS = 1.0;
constexpr double kFuzzBudgetS = 300.0;
constexpr int kFuzzPrograms = 600;
constexpr int kExampleOrders = 200;
constexpr double kTgridBudgetS = 60.0;
constexpr int kTgridMaxWidth = 6;

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool ok = true;
    std::vector<std::string> notes;
    void fail(std::string s) {
        ok = false;
        if (notes.size() < 12) notes.push_back(std::move(s));
    }
};

int failures = 0;

// Fixed-point summaries with millisecond resolution.
std::ostringstream summary_stream() {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(3);
    return s;
}

void report(int n, const char* title, const Outcome& o, const std::string& summary) {
    std::cout << "criterion " << n << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  (" << summary << ")\n";
    for (const auto& s : o.notes) std::cout << "    " << s << "\n";
    std::cout.flush();
    if (!o.ok) ++failures;
}

// TD from an elimination order: bag(v) = v plus its neighbours at elimination time.
TreeDecomposition elimination_td(const Graph& g, const std::vector<Vertex>& order) {
    const std::size_t n = g.num_vertices();
    std::vector<std::set<Vertex>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;
    TreeDecomposition td;
    std::vector<Node> node_of(n);
    for (Vertex v : order) {
        std::vector<Vertex> bag{v};
        for (Vertex u : adj[v]) bag.push_back(u);
        std::sort(bag.begin(), bag.end());
        node_of[v] = td.add_node(bag);
        for (Vertex a : adj[v])
            for (Vertex b : adj[v])
                if (a != b) adj[a].insert(b);
        for (Vertex u : adj[v]) adj[u].erase(v);
    }
    // parent: the neighbour eliminated first after v, else the next vertex in the order
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Vertex v = order[i];
        const auto& bag = td.bags[node_of[v]];
        Vertex best = order[i + 1];
        std::size_t bp = n;
        for (Vertex u : bag)
            if (u != v && pos[u] < bp) {
                bp = pos[u];
                best = u;
            }
        td.link(node_of[v], node_of[best]);
    }
    if (n == 0) td.add_node({});
    td.root = n ? node_of[order.back()] : 0;
    td.parent[td.root] = td.root;
    return td;
}

// ---------------------------------------------------------------------------
// 1. Example program over many decompositions.

void criterion1() {
    const auto t0 = Clock::now();
    Outcome o;
    const Program p = sample_program();
    const std::set<std::vector<std::string>> answer_sets{{"a"}, {"c", "d"}, {"b", "c", "d"}};
    std::size_t runs = 0;
    std::mt19937_64 rng(1);
    for (auto [kind, algo] : {std::pair{GraphKind::Primal, Algorithm::Prim}, std::pair{GraphKind::Incidence, Algorithm::Inc}}) {
        const Graph g = build_graph(p, kind);
        std::vector<TreeDecomposition> tds;
        for (auto h : {Heuristic::MinFill, Heuristic::MinDegree})
            for (std::uint64_t s = 1; s <= 5; ++s) tds.push_back(heuristic_td(g, h, s));
        TreeDecomposition trivial;
        std::vector<Vertex> all(g.num_vertices());
        std::iota(all.begin(), all.end(), 0);
        trivial.add_node(all);
        tds.push_back(trivial);
        std::vector<Vertex> order(g.num_vertices());
        std::iota(order.begin(), order.end(), 0);
        for (int i = 0; i < kExampleOrders; ++i) {
            std::shuffle(order.begin(), order.end(), rng);
            tds.push_back(elimination_td(g, order));
        }
        for (const auto& td : tds) {
            if (!validate_td(g, td).ok) {
                o.fail("generated TD invalid");
                continue;
            }
            for (Task task : {Task::CountOptimal, Task::Extract}) {
                SolveOptions opt;
                opt.graph = kind;
                opt.algorithm = algo;
                opt.task = task;
                opt.td = td;
                opt.check_invariants = true;
                auto r = solve(p, opt);
                ++runs;
                std::ostringstream what;
                what << to_string(algo) << " width " << td.width() << ": ";
                if (!r.consistent || r.optimum != 0) o.fail(what.str() + "not consistent with optimum 0");
                if (task == Task::CountOptimal && r.count != 3) o.fail(what.str() + "count " + r.count.str());
                if (task == Task::Extract && (!r.answer_set || !answer_sets.count(p.names_of(*r.answer_set))))
                    o.fail(what.str() + "extracted set is not an answer set");
            }
        }
    }
    // the hand-made reference decompositions as well
    {
        const NiceTreeDecomposition pt = prim_reference_td(), it = inc_reference_td();
        const Graph pg = primal_graph(p), ig = incidence_graph(p);
        DpContext pc = prepare_dp(p, pg, pt, GraphKind::Primal);
        PrimAlgorithm pa(pc, {true, true});
        auto ps = run_dp(pa, pc, false);
        auto pr = read_root(*ps[pt.root], PrimAlgorithm::empty_key());
        DpContext ic = prepare_dp(p, ig, it, GraphKind::Incidence);
        IncAlgorithm ia(ic, {true, true, true});
        auto is = run_dp(ia, ic, false);
        auto ir = read_root(*is[it.root], IncAlgorithm::empty_key());
        runs += 2;
        if (!pr.consistent || pr.optimum != 0 || pr.count != 3) o.fail("PRIM on the reference TD");
        if (!ir.consistent || ir.optimum != 0 || ir.count != 3) o.fail("INC on the reference TD");
    }
    const double s = seconds_since(t0);
    if (s > kExampleBudgetS) o.fail("took " + std::to_string(s) + " s");
    auto sum = summary_stream();
    sum << runs << " runs, " << s << " s";
    report(1, "example program: consistent, optimum 0, count 3, extraction", o, sum.str());
}

// ---------------------------------------------------------------------------
// 2. Reference tables.

void diff_rows(Outcome& o, const std::string& name, const Rows& got, const Rows& want) {
    if (got == want) return;
    std::string msg = name + " differs:";
    for (const auto& r : want)
        if (!got.count(r)) msg += " missing " + r;
    for (const auto& r : got)
        if (!want.count(r)) msg += " extra " + r;
    o.fail(msg);
}

void criterion2() {
    const auto t0 = Clock::now();
    Outcome o;
    std::size_t n = 0;
    for (bool counting : {false, true}) {
        auto prim = prim_reference_tables(counting);
        for (const auto& [t, rows] : prim_expected()) {
            if (!counting) diff_rows(o, "PRIM t" + std::to_string(t), prim.at(t), rows);
            else if (prim.at(t) != prim_reference_tables(false).at(t)) o.fail("PRIM counting changes t" + std::to_string(t));
            ++n;
        }
        for (bool caps : {true, false}) {
            auto inc = inc_reference_tables(counting, caps);
            for (const auto& [t, rows] : inc_expected()) {
                if (!counting && caps) diff_rows(o, "INC t" + std::to_string(t), inc.at(t), rows);
                else if (inc.at(t) != inc_reference_tables(false, true).at(t))
                    o.fail("INC variant changes t" + std::to_string(t));
                ++n;
            }
        }
    }
    const double s = seconds_since(t0);
    if (s > kGoldenBudgetS) o.fail("took " + std::to_string(s) + " s");
    auto sum = summary_stream();
    sum << n << " table comparisons, " << s << " s";
    report(2, "golden tables equal the reference tables", o, sum.str());
}

// ---------------------------------------------------------------------------
// 3-5. Fuzzing against brute force, with structural checks and table ceilings.

double log2_prim_ceiling(int k) { return (k + 1) + std::ldexp(1.0, k + 1); }

double log2_inc_ceiling(int k, double ell) {
    const double lk = std::pow(ell, k + 1);
    return (k + 1) + (k + 1) * std::log2(ell) + std::ldexp(1.0, k + 1) * lk;
}

struct FuzzTotals {
    Outcome c3, c4, c5;
    std::size_t runs = 0, tds = 0, tables = 0;
    double worst_prim = -1e9, worst_inc = -1e9;  // log2(size) - log2(ceiling)
};

template <class Algo>
RootSummary run_checked(FuzzTotals& f, const Program& p, const Graph& g, const NiceTreeDecomposition& nice,
                        GraphKind kind, Algo& algo, DpContext& ctx, const std::string& tag) {
    auto store = run_dp(algo, ctx, true);
    const int k = nice.width();
    Weight maxb = 0;
    for (const auto& r : p.rules())
        if (r.kind == RuleKind::Weight) maxb = std::max(maxb, r.bound);
    const double ell = std::max<double>(3, static_cast<double>(maxb));
    for (Node t = 0; t < nice.size(); ++t) {
        const auto& nc = ctx.nodes[t];
        const auto& tab = *store[t];
        ++f.tables;
        const double ls = tab.size() ? std::log2(static_cast<double>(tab.size())) : -1;
        if constexpr (std::is_same_v<Algo, PrimAlgorithm>) {
            const double d = ls - log2_prim_ceiling(k);
            f.worst_prim = std::max(f.worst_prim, d);
            if (d > 0) f.c5.fail(tag + ": PRIM table of " + std::to_string(tab.size()) + " tuples above ceiling");
        } else {
            const double d = ls - log2_inc_ceiling(k, ell);
            f.worst_inc = std::max(f.worst_inc, d);
            if (d > 0) f.c5.fail(tag + ": INC table of " + std::to_string(tab.size()) + " tuples above ceiling");
            // rule-state domains are exactly the bag-rules
            if (nc.rules != bag_rules(p, g, nice.bags[t], kind)) f.c4.fail(tag + ": bag-rules mismatch");
            for (const auto& key : tab.keys) {
                if (key.sigma.size() != nc.rules.size()) f.c4.fail(tag + ": witness state domain differs from bag-rules");
                for (const auto& c : key.cws)
                    if (c.rho.size() != nc.rules.size()) f.c4.fail(tag + ": counterwitness state domain differs");
            }
        }
    }
    return read_root(*store[nice.root], Algo::empty_key());
}

void fuzz() {
    const auto t0 = Clock::now();
    FuzzTotals f;
    std::size_t kinds[4] = {};
    for (int i = 0; i < kFuzzPrograms; ++i) {
        const std::uint64_t seed = 10'000 + static_cast<std::uint64_t>(i);
        const Program p = random_program(seed);
        for (const auto& r : p.rules()) ++kinds[static_cast<int>(r.kind)];
        const BfSummary bf = bf_optimal(p);
        const OracleReport orc = count_optimal(p);
        const std::string tag = "seed " + std::to_string(seed);
        if (orc.optimum.has_value() != bf.consistent || (bf.consistent && (*orc.optimum != bf.optimum || orc.optimal_count != bf.count)))
            f.c3.fail(tag + ": library oracle disagrees with test brute force");

        for (auto kind : {GraphKind::Primal, GraphKind::Incidence}) {
            const Graph g = build_graph(p, kind);
            for (auto h : {Heuristic::MinFill, Heuristic::MinDegree}) {
                const TreeDecomposition td = heuristic_td(g, h, seed);
                ++f.tds;
                if (auto r = validate_td(g, td); !r.ok) f.c4.fail(tag + ": TD invalid: " + r.violations.front());
                const NiceTreeDecomposition nice = make_nice(td);
                if (auto r = validate_nice(nice); !r.ok) f.c4.fail(tag + ": nice TD invalid: " + r.violations.front());
                if (auto r = validate_td(g, nice); !r.ok) f.c4.fail(tag + ": nice TD not a TD: " + r.violations.front());
                if (nice.width() != td.width()) f.c4.fail(tag + ": make_nice changed the width");
                if (kind == GraphKind::Primal) {
                    for (const auto& r : p.rules()) {
                        auto at = r.atoms();
                        std::sort(at.begin(), at.end());
                        bool covered = false;
                        for (const auto& b : td.bags) covered |= std::includes(b.begin(), b.end(), at.begin(), at.end());
                        if (!covered) f.c4.fail(tag + ": rule without covering bag");
                    }
                }
                DpContext ctx = prepare_dp(p, g, nice, kind);
                auto compare = [&](const RootSummary& s, const std::string& which) {
                    ++f.runs;
                    if (s.consistent != bf.consistent) f.c3.fail(tag + " " + which + ": consistency differs");
                    else if (bf.consistent && (s.optimum != bf.optimum || s.count != bf.count))
                        f.c3.fail(tag + " " + which + ": (" + std::to_string(s.optimum) + "," + s.count.str() +
                                  ") vs brute force (" + std::to_string(bf.optimum) + "," + std::to_string(bf.count) + ")");
                };
                if (kind == GraphKind::Primal) {
                    PrimAlgorithm algo(ctx, {true, true});
                    compare(run_checked(f, p, g, nice, kind, algo, ctx, tag), "PRIM");
                } else {
                    for (bool caps : {true, false}) {
                        IncAlgorithm algo(ctx, {true, caps, true});
                        compare(run_checked(f, p, g, nice, kind, algo, ctx, tag), caps ? "INC" : "INC uncapped");
                    }
                }
            }
            // end-to-end through solve, with extraction
            SolveOptions o;
            o.graph = kind;
            o.algorithm = kind == GraphKind::Primal ? Algorithm::Prim : Algorithm::Inc;
            o.task = Task::Extract;
            o.seed = seed;
            auto r = solve(p, o);
            ++f.runs;
            if (r.consistent != bf.consistent) f.c3.fail(tag + ": solve consistency differs");
            if (r.answer_set && (!bf_answer_set(p, to_bits(*r.answer_set)) || bf_cost(p, to_bits(*r.answer_set)) != bf.optimum))
                f.c3.fail(tag + ": extracted set is not an optimal answer set");
        }
    }
    const double s = seconds_since(t0);
    if (s > kFuzzBudgetS) f.c3.fail("took " + std::to_string(s) + " s");
    for (int k = 0; k < 4; ++k)
        if (kinds[k] == 0) f.c3.fail(std::string("no ") + to_string(static_cast<RuleKind>(k)) + " rules generated");
    auto s3 = summary_stream(), s4 = summary_stream(), s5 = summary_stream();
    s3 << kFuzzPrograms << " programs, " << f.runs << " solver runs, " << s << " s";
    s4 << f.tds << " decompositions, " << f.tables << " tables";
    s5 << "largest log2(size/ceiling): PRIM " << f.worst_prim << ", INC " << f.worst_inc;
    report(3, "fuzzed programs agree with brute force (PRIM/primal, INC/incidence)", f.c3, s3.str());
    report(4, "structural invariants", f.c4, s4.str());
    report(5, "table-size ceilings", f.c5, s5.str());
}

// ---------------------------------------------------------------------------
// 6. Generators and encoders.

std::uint64_t clause_count(const TGrid& g) {
    const std::size_t n = g.program.num_atoms();
    std::uint64_t c = 0;
    for (Bits m = 0; m < (Bits{1} << n); ++m) {
        bool ok = true;
        for (const auto& cl : g.clauses) {
            bool sat = false;
            for (int i = 0; i < 3; ++i) sat |= ((m >> cl.atoms[i] & 1) != 0) == cl.positive[i];
            if (!sat) { ok = false; break; }
        }
        c += ok;
    }
    return c;
}

using AdjMask = std::vector<Bits>;  // neighbourhood per vertex

AdjMask adjacency(const Graph& g) {
    AdjMask a(g.num_vertices(), 0);
    for (auto [u, v] : g.edges()) {
        a[u] |= Bits{1} << v;
        a[v] |= Bits{1} << u;
    }
    return a;
}

std::uint64_t bf_colorings(const AdjMask& a) {
    const std::size_t n = a.size();
    std::uint64_t total = 1, count = 0;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    std::vector<int> col(n);
    for (std::uint64_t x = 0; x < total; ++x) {
        std::uint64_t y = x;
        for (std::size_t i = 0; i < n; ++i, y /= 3) col[i] = static_cast<int>(y % 3);
        bool ok = true;
        for (std::size_t u = 0; u < n && ok; ++u)
            for (std::size_t v = u + 1; v < n; ++v)
                if ((a[u] >> v & 1) && col[u] == col[v]) { ok = false; break; }
        count += ok;
    }
    return count;
}

bool covers(const AdjMask& a, Bits s) {
    for (std::size_t u = 0; u < a.size(); ++u)
        if (!(s >> u & 1) && (a[u] & ~s)) return false;
    return true;
}

bool dominates(const AdjMask& a, Bits s) {
    for (std::size_t u = 0; u < a.size(); ++u)
        if (!(s >> u & 1) && !(a[u] & s)) return false;
    return true;
}

std::uint64_t bf_minimal(const AdjMask& a, const std::function<bool(const AdjMask&, Bits)>& prop) {
    const Bits full = (Bits{1} << a.size()) - 1;
    std::uint64_t c = 0;
    for (Bits s = 0; s <= full; ++s) {
        if (!prop(a, s)) continue;
        bool minimal = true;
        for (Bits r = s; r && minimal; r &= r - 1)
            if (prop(a, s & ~(r & -r))) minimal = false;
        c += minimal;
    }
    return c;
}

std::pair<int, std::uint64_t> bf_min_cardinality_covers(const AdjMask& a) {
    const Bits full = (Bits{1} << a.size()) - 1;
    int best = 99;
    std::uint64_t c = 0;
    for (Bits s = 0; s <= full; ++s) {
        if (!covers(a, s)) continue;
        int k = __builtin_popcount(s);
        if (k < best) { best = k; c = 0; }
        if (k == best) ++c;
    }
    return {best, c};
}

// Canonical adjacency string over labelings that list vertices by non-decreasing degree.
std::string canonical(const AdjMask& a) {
    const std::size_t n = a.size();
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    auto deg = [&](Vertex v) { return __builtin_popcount(a[v]); };
    std::sort(perm.begin(), perm.end(), [&](Vertex x, Vertex y) { return deg(x) < deg(y); });
    // permute within runs of equal degree
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && deg(perm[j]) == deg(perm[i])) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::string best;
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == runs.size()) {
            std::string s;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) s += (a[perm[i]] >> perm[j] & 1) ? '1' : '0';
            if (best.empty() || s < best) best = s;
            return;
        }
        auto [lo, hi] = runs[r];
        std::sort(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi));
        do rec(r + 1);
        while (std::next_permutation(perm.begin() + static_cast<long>(lo), perm.begin() + static_cast<long>(hi)));
    };
    rec(0);
    return best;
}

// All graphs on n vertices up to isomorphism, grown vertex by vertex.
std::vector<AdjMask> graphs_up_to_iso(std::size_t n) {
    std::vector<AdjMask> level{AdjMask{}};
    for (std::size_t m = 1; m <= n; ++m) {
        std::map<std::string, AdjMask> next;
        for (const auto& g : level)
            for (Bits nb = 0; nb < (Bits{1} << (m - 1)); ++nb) {
                AdjMask h = g;
                h.push_back(nb);
                for (std::size_t u = 0; u + 1 < m; ++u)
                    if (nb >> u & 1) h[u] |= Bits{1} << (m - 1);
                next.emplace(canonical(h), h);
            }
        level.clear();
        for (auto& [_, h] : next) level.push_back(std::move(h));
    }
    return level;
}

Graph to_graph(const AdjMask& a) {
    Graph g(a.size());
    for (std::size_t u = 0; u < a.size(); ++u)
        for (std::size_t v = u + 1; v < a.size(); ++v)
            if (a[u] >> v & 1) g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
    return g;
}

void criterion6() {
    const auto t0 = Clock::now();
    Outcome o;
    auto solve_count = [](const Program& p) {
        SolveOptions s;
        s.task = Task::CountOptimal;
        return solve(p, s);
    };
    std::size_t grids = 0, graphs = 0;
    for (int k = 1; k <= 3; ++k)
        for (int l = 1; l <= 6; ++l)
            for (double pr : {0.5, 1.0})
                for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                    auto g = generate_tgrid(k, l, pr, seed);
                    auto r = solve_count(g.program);
                    ++grids;
                    const std::uint64_t want = clause_count(g);
                    if ((want > 0) != r.consistent || (want > 0 && r.count != want))
                        o.fail("tgrid(" + std::to_string(k) + "," + std::to_string(l) + "," + std::to_string(pr) + ") seed " +
                               std::to_string(seed) + ": " + r.count.str() + " vs " + std::to_string(want));
                }

    auto check_graph = [&](const AdjMask& a, const std::string& name) {
        const Graph g = to_graph(a);
        ++graphs;
        auto expect = [&](GraphProblem prob, std::uint64_t want, std::optional<Cost> opt = std::nullopt) {
            auto r = solve_count(encode_graph_problem(g, prob));
            const bool bad = (want > 0) != r.consistent || (want > 0 && r.count != want) || (opt && r.optimum != opt);
            if (bad) o.fail(name + " " + to_string(prob) + ": " + r.count.str() + " vs " + std::to_string(want));
        };
        expect(GraphProblem::ThreeCol, bf_colorings(a));
        const auto mvc = bf_minimal(a, covers);
        expect(GraphProblem::Svc, mvc);
        expect(GraphProblem::TwoCol, mvc);
        auto [best, cnt] = bf_min_cardinality_covers(a);
        expect(GraphProblem::Cvc, cnt, best);
        expect(GraphProblem::Ds, bf_minimal(a, dominates));
    };
    std::size_t classes = 0;
    for (std::size_t n = 1; n <= 7; ++n)
        for (const auto& a : graphs_up_to_iso(n)) {
            ++classes;
            check_graph(a, "graph on " + std::to_string(n) + " vertices");
        }
    // every labelled graph up to five vertices as well
    for (std::size_t n = 1; n <= 5; ++n) {
        const std::size_t pairs = n * (n - 1) / 2;
        for (Bits e = 0; e < (Bits{1} << pairs); ++e) {
            AdjMask a(n, 0);
            std::size_t i = 0;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v, ++i)
                    if (e >> i & 1) {
                        a[u] |= Bits{1} << v;
                        a[v] |= Bits{1} << u;
                    }
            check_graph(a, "labelled graph " + std::to_string(e) + " on " + std::to_string(n));
        }
    }
    if (classes != 1 + 2 + 4 + 11 + 34 + 156 + 1044) o.fail("isomorphism classes enumerated: " + std::to_string(classes));
    auto sum = summary_stream();
    sum << grids << " grids, " << classes << " isomorphism classes on <=7 vertices, " << graphs << " graphs checked, "
        << seconds_since(t0) << " s";
    report(6, "generator and encoder fidelity", o, sum.str());
}

// ---------------------------------------------------------------------------
// 7. Scaling.

void criterion7() {
    Outcome o;
    auto sum = summary_stream();
    for (int l : {40, 80, 120, 160, 200}) {
        const auto g = generate_tgrid(3, l, 0.85, 1);
        SolveOptions s;
        s.graph = GraphKind::Incidence;
        s.algorithm = Algorithm::Inc;
        s.task = Task::CountOptimal;
        const auto t0 = Clock::now();
        auto r = solve(g.program, s);
        const double sec = seconds_since(t0);
        sum << (l == 40 ? "" : "; ") << "l=" << l << ": width " << r.width << ", " << sec << " s";
        if (sec > kTgridBudgetS) o.fail("l=" + std::to_string(l) + " took " + std::to_string(sec) + " s");
        if (r.width > kTgridMaxWidth) o.fail("l=" + std::to_string(l) + " width " + std::to_string(r.width));
    }
    report(7, "tgrid(3, l, 0.85) count-optimal with INC", o, sum.str());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    fuzz();
    criterion6();
    criterion7();
    std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criteria failed" : std::string("acceptance: all criteria passed"))
              << "\n";
    return failures ? 1 : 0;
}
