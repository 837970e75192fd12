#include "ocalc/closure.hpp"

#include <algorithm>
#include <set>

#include "ocalc/error.hpp"
#include "ocalc/presentation.hpp"

namespace ocalc {

int Shape::open() const {
    int n = 0;
    for (int l : lengths) n += l;
    return n;
}

int Shape::twice_genus() const { return 4 * genus + 2 * static_cast<int>(lengths.size()) - 2 + closed; }

Shape shape_of(const Surface& x) {
    Shape s;
    for (const auto& c : x.boundaries().cycles()) s.lengths.push_back(static_cast<int>(c.size()));
    std::sort(s.lengths.begin(), s.lengths.end());
    s.genus = x.genus();
    s.closed = static_cast<int>(x.closed().size());
    return s;
}

namespace {

std::vector<std::vector<Label>> rep_cycles(const Shape& s) {
    std::vector<std::vector<Label>> out;
    int next = 1;
    for (int len : s.lengths) {
        auto& w = out.emplace_back();
        for (int i = 0; i < len; ++i) w.emplace_back("o" + std::to_string(next++));
    }
    return out;
}

LabelSet rep_closed(const Shape& s) {
    LabelSet out;
    for (int i = 1; i <= s.closed; ++i) out.emplace("c" + std::to_string(i));
    return out;
}

}  // namespace

Surface representative(const Shape& s) {
    std::vector<Cycle> cycles;
    for (auto& w : rep_cycles(s)) cycles.push_back(canonical_cycle(std::move(w)));
    return Surface(Multicycle(std::move(cycles)), s.genus, rep_closed(s));
}

std::string to_string(const Shape& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.lengths.size(); ++i) out += (i ? "," : "") + std::to_string(s.lengths[i]);
    return out + "]_" + std::to_string(s.genus) + "{" + std::to_string(s.closed) + "}";
}

namespace {

// Genus and operadic genus never decrease along a derivation, so those bounds
// prune exactly. Label and boundary counts can shrink again, so intermediate
// shapes get some slack; the reachability report checks the result.
constexpr int open_slack = 2;
constexpr int closed_slack = 2;
constexpr int boundary_slack = 2;

enum class Op { Mu, Omega, Phi, ComposeOpen, ComposeClosed, ContractSame, ContractDiff, ContractClosed };

struct Derivation {
    Op op;
    Shape x{}, y{};
    std::size_t i = 0, j = 0, k = 0;
};

Shape make_shape(std::vector<int> lengths, int genus, int closed) {
    std::sort(lengths.begin(), lengths.end());
    return {std::move(lengths), genus, closed};
}

std::vector<int> without(const std::vector<int>& v, std::size_t i, std::size_t j = SIZE_MAX) {
    std::vector<int> out;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i && k != j) out.push_back(v[k]);
    return out;
}

// first index of each distinct value with length at least `min_len`
std::vector<std::size_t> distinct_cycles(const std::vector<int>& lengths, int min_len) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < lengths.size(); ++i)
        if (lengths[i] >= min_len && (i == 0 || lengths[i] != lengths[i - 1])) out.push_back(i);
    return out;
}

class Explorer {
public:
    explicit Explorer(const Budget& b) : budget_(b) {
        max_twice_ = 4 * b.genus + 2 * b.boundary_bound() - 2 + b.closed;
    }

    void run() {
        std::vector<Shape> frontier;
        offer(make_shape({3}, 0, 0), {Op::Mu}, frontier);
        offer(make_shape({}, 0, 3), {Op::Omega}, frontier);
        offer(make_shape({1}, 0, 1), {Op::Phi}, frontier);
        while (!frontier.empty()) {
            known_.insert(known_.end(), frontier.begin(), frontier.end());
            std::vector<Shape> next;
            for (const auto& x : frontier) {
                unary(x, next);
                for (std::size_t n = 0; n < known_.size(); ++n) binary(x, known_[n], next);
            }
            frontier = std::move(next);
        }
    }

    bool in_budget(const Shape& s) const {
        return s.open() <= budget_.open && s.closed <= budget_.closed && s.genus <= budget_.genus &&
               static_cast<int>(s.lengths.size()) <= budget_.boundary_bound();
    }

    const std::map<Shape, Derivation>& found() const { return found_; }

    Term witness(const Shape& s) {
        if (auto it = witnesses_.find(s); it != witnesses_.end()) return it->second;
        const Derivation& d = found_.at(s);
        Term t = build(d);
        if (d.op != Op::Mu && d.op != Op::Omega && d.op != Op::Phi) t = canonicalize(t, s);
        witnesses_.emplace(s, t);
        return t;
    }

private:
    bool admits(const Shape& s) const {
        return s.genus <= budget_.genus && s.twice_genus() <= max_twice_ && s.open() <= budget_.open + open_slack &&
               s.closed <= budget_.closed + closed_slack &&
               static_cast<int>(s.lengths.size()) <= budget_.boundary_bound() + boundary_slack;
    }

    void offer(Shape s, Derivation d, std::vector<Shape>& next) {
        if (!admits(s)) return;
        if (found_.emplace(s, std::move(d)).second) next.push_back(std::move(s));
    }

    void unary(const Shape& x, std::vector<Shape>& next) {
        const auto& L = x.lengths;
        for (auto i : distinct_cycles(L, 2)) {
            for (int k = 1; k < L[i]; ++k) {
                auto ls = without(L, i);
                ls.push_back(k - 1);
                ls.push_back(L[i] - k - 1);
                offer(make_shape(std::move(ls), x.genus, x.closed),
                      {Op::ContractSame, x, {}, i, 0, static_cast<std::size_t>(k)}, next);
            }
        }
        for (std::size_t i = 0; i < L.size(); ++i)
            for (std::size_t j = i + 1; j < L.size(); ++j) {
                if (L[i] < 1 || L[j] < 1) continue;
                if ((i > 0 && L[i] == L[i - 1]) || (j > i + 1 && L[j] == L[j - 1])) continue;
                auto ls = without(L, i, j);
                ls.push_back(L[i] + L[j] - 2);
                offer(make_shape(std::move(ls), x.genus + 1, x.closed), {Op::ContractDiff, x, {}, i, j}, next);
            }
        if (x.closed >= 2) offer(make_shape(L, x.genus + 1, x.closed - 2), {Op::ContractClosed, x}, next);
    }

    void binary(const Shape& x, const Shape& y, std::vector<Shape>& next) {
        for (auto i : distinct_cycles(x.lengths, 1))
            for (auto j : distinct_cycles(y.lengths, 1)) {
                auto ls = without(x.lengths, i);
                auto ry = without(y.lengths, j);
                ls.insert(ls.end(), ry.begin(), ry.end());
                ls.push_back(x.lengths[i] + y.lengths[j] - 2);
                offer(make_shape(std::move(ls), x.genus + y.genus, x.closed + y.closed),
                      {Op::ComposeOpen, x, y, i, j}, next);
            }
        if (x.closed >= 1 && y.closed >= 1) {
            auto ls = x.lengths;
            ls.insert(ls.end(), y.lengths.begin(), y.lengths.end());
            offer(make_shape(std::move(ls), x.genus + y.genus, x.closed + y.closed - 2), {Op::ComposeClosed, x, y},
                  next);
        }
    }

    Term build(const Derivation& d) {
        switch (d.op) {
        case Op::Mu: return Term::mu("o1", "o2", "o3");
        case Op::Omega: return Term::omega("c1", "c2", "c3");
        case Op::Phi: return Term::phi("o1", "c1");
        case Op::ComposeOpen:
        case Op::ComposeClosed: {
            auto prefixed = [](const Term& t, const std::string& p) {
                return rename_labels(t, [&](const Label& l) { return Label(p + l.token()); });
            };
            Term tx = prefixed(witness(d.x), "L.");
            Term ty = prefixed(witness(d.y), "R.");
            if (d.op == Op::ComposeClosed) return Term::comp(tx, ty, "L.c1", "R.c1");
            return Term::comp(tx, ty, "L." + rep_cycles(d.x)[d.i][0].token(), "R." + rep_cycles(d.y)[d.j][0].token());
        }
        case Op::ContractSame: {
            const auto cyc = rep_cycles(d.x)[d.i];
            return Term::contract(witness(d.x), cyc[0], cyc[d.k]);
        }
        case Op::ContractDiff: {
            const auto cycles = rep_cycles(d.x);
            return Term::contract(witness(d.x), cycles[d.i][0], cycles[d.j][0]);
        }
        case Op::ContractClosed: return Term::contract(witness(d.x), "c1", "c2");
        }
        throw Error(Errc::MalformedTerm, "unknown derivation");
    }

    // Renames the boundary labels of `t` onto the shape's representative and
    // the internal labels onto #0, #1, ...
    static Term canonicalize(const Term& t, const Shape& s) {
        const Surface got = eval_term(t).surface;
        const Surface want = representative(s);
        std::map<Label, Label> rho;
        const auto& gc = got.boundaries().cycles();
        const auto& wc = want.boundaries().cycles();
        for (std::size_t i = 0; i < gc.size(); ++i)
            for (std::size_t k = 0; k < gc[i].size(); ++k) rho.emplace(gc[i].word()[k], wc[i].word()[k]);
        auto wcl = want.closed().begin();
        for (const auto& c : got.closed()) rho.emplace(c, *wcl++);
        std::size_t internal = 0;
        for (const auto& l : all_labels(t))
            if (!rho.contains(l)) rho.emplace(l, Label("#" + std::to_string(internal++)));
        return rename_labels(t, [&](const Label& l) { return rho.at(l); });
    }

    Budget budget_;
    int max_twice_ = 0;
    std::map<Shape, Derivation> found_;
    std::vector<Shape> known_;
    std::map<Shape, Term> witnesses_;
};

}  // namespace

std::map<Surface, Term> generate_closure(const Budget& budget) {
    Explorer ex(budget);
    ex.run();
    std::map<Surface, Term> out;
    for (const auto& [shape, d] : ex.found())
        if (ex.in_budget(shape)) out.emplace(representative(shape), ex.witness(shape));
    return out;
}

ReachabilityReport kp_reachability_report(const Budget& budget) {
    std::set<Shape> expected;
    const int max_twice = 4 * budget.genus + 2 * budget.boundary_bound() - 2 + budget.closed;
    for (int o = 0; o <= budget.open; ++o)
        for (int c = 0; c <= budget.closed; ++c) {
            LabelSet open, closed;
            for (int i = 1; i <= o; ++i) open.emplace("o" + std::to_string(i));
            for (int i = 1; i <= c; ++i) closed.emplace("c" + std::to_string(i));
            for (int t = 0; t <= max_twice; ++t)
                for (const auto& x : enumerate_qoc(open, closed, {t}))
                    if (x.genus() <= budget.genus && static_cast<int>(x.boundary_count()) <= budget.boundary_bound() &&
                        is_modular_kp(x))
                        expected.insert(shape_of(x));
        }

    ReachabilityReport report;
    std::set<Shape> reached;
    for (const auto& [surface, witness] : generate_closure(budget)) {
        const Shape s = shape_of(surface);
        reached.insert(s);
        if (eval_term(witness).surface != surface) report.bad_witnesses.push_back(s);
    }
    std::set_difference(expected.begin(), expected.end(), reached.begin(), reached.end(),
                        std::back_inserter(report.missing));
    std::set_difference(reached.begin(), reached.end(), expected.begin(), expected.end(),
                        std::back_inserter(report.extra));
    report.expected = expected.size();
    report.reached = reached.size();
    return report;
}

}  // namespace ocalc
