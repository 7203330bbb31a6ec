#include "mml/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <optional>
#include <sstream>

#include "mml/kernels.hpp"

namespace mml {

namespace {

std::string slope_text(const Slope& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

double length_of(const Slope& s, Dual trace) {
    try {
        return translation_length(trace.re);
    } catch (const NotHyperbolic&) {
        std::ostringstream msg;
        msg << "curve of slope " << s << " has trace " << trace.re << "; representation is not Fuchsian";
        throw NotHyperbolic(msg.str());
    }
}

CurveClass make_curve(const Slope& s, Dual trace) {
    CurveClass c;
    c.slope = s;
    c.word = slope_word(s);
    c.trace = trace;
    c.length = length_of(s, trace);
    c.alpha = margulis_from_trace(trace);
    return c;
}

} // namespace

std::vector<Slope> farey_enumerate(int max_denominator_sum) {
    std::vector<Slope> out;
    if (max_denominator_sum < 1) return out;
    out.push_back({1, 0});
    out.push_back({0, 1});

    struct Node {
        Slope left, right;
    };
    std::deque<Node> queue{{{0, 1}, {1, 0}}, {{0, 1}, {-1, 0}}};
    while (!queue.empty()) {
        const Node node = queue.front();
        queue.pop_front();
        const Slope mid{node.left.p + node.right.p, node.left.q + node.right.q};
        if (std::abs(mid.p) + mid.q > max_denominator_sum) continue;
        out.push_back(mid);
        queue.push_back({node.left, mid});
        queue.push_back({mid, node.right});
    }
    return out;
}

std::string slope_word(const Slope& s) {
    const std::int64_t p = std::abs(s.p);
    const std::int64_t q = s.q;
    const std::int64_t n = p + q;
    std::string word;
    word.reserve(static_cast<std::size_t>(n));
    // Letter i is b exactly when the line of slope q/n crosses an integer level.
    for (std::int64_t i = 1; i <= n; ++i) {
        word.push_back((i * q) / n - ((i - 1) * q) / n == 1 ? 'b' : 'a');
    }
    return word;
}

DualMatrix2 evaluate_word(const HoledTorusRep& rep, const Slope& s) {
    const DualMatrix2 a = s.p < 0 ? inverse(rep.a) : rep.a;
    DualMatrix2 out = DualMatrix2::identity();
    for (char letter : slope_word(s)) out = out * (letter == 'a' ? a : rep.b);
    return out;
}

TraceRecursion::TraceRecursion(const HoledTorusRep& rep) {
    memo_[{1, 0}] = rep.a.trace();
    memo_[{0, 1}] = rep.b.trace();
    memo_[{1, 1}] = (rep.a * rep.b).trace();
    memo_[{-1, 1}] = (inverse(rep.a) * rep.b).trace();
}

Dual TraceRecursion::trace(const Slope& target) {
    if (!is_canonical(target)) throw InputError("slope " + slope_text(target) + " is not canonical");
    if (auto it = memo_.find(target); it != memo_.end()) return it->second;

    const std::int64_t sign = target.p < 0 ? -1 : 1;
    const std::int64_t tp = std::abs(target.p);
    // Walk down the Stern–Brocot tree on the target's side, carrying the
    // Farey triple (left, right, mediant) with traces.
    Slope left{0, 1}, right{1, 0}, mid{1, 1};
    Dual t_left = memo_.at({0, 1});
    Dual t_right = memo_.at({1, 0});
    Dual t_mid = memo_.at({sign, 1});
    while (!(mid.p == tp && mid.q == target.q)) {
        Slope next;
        Dual t_next;
        if (tp * mid.q < mid.p * target.q) {
            next = {left.p + mid.p, left.q + mid.q};
            t_next = t_left * t_mid - t_right;
            right = mid;
            t_right = t_mid;
        } else {
            next = {mid.p + right.p, mid.q + right.q};
            t_next = t_mid * t_right - t_left;
            left = mid;
            t_left = t_mid;
        }
        const Slope key{sign * next.p, next.q};
        auto [it, inserted] = memo_.try_emplace(key, t_next);
        mid = next;
        t_mid = it->second;
    }
    memo_[target] = t_mid;
    return t_mid;
}

double trace_discrepancy(const HoledTorusRep& rep, const CurveClass& c) {
    const Dual direct = evaluate_word(rep, c.slope).trace();
    const double scale_re = std::max(1.0, std::abs(c.trace.re));
    const double scale_inf = std::max({1.0, std::abs(c.trace.re), std::abs(c.trace.inf)});
    return std::max(std::abs(direct.re - c.trace.re) / scale_re,
                    std::abs(direct.inf - c.trace.inf) / scale_inf);
}

double slope_trace(const HoledTorusRep& rep, const Slope& s) {
    TraceRecursion recursion(rep);
    CurveClass c;
    c.slope = s;
    c.trace = recursion.trace(s);
    if (trace_discrepancy(rep, c) > kRecursionMismatchTol) {
        throw RecursionMismatch("trace recursion and word evaluation disagree at slope " + slope_text(s));
    }
    return c.trace.re;
}

std::vector<CurveClass> enumerate_curves(const HoledTorusRep& rep, double length_cutoff) {
    TraceRecursion seeds(rep);
    std::vector<CurveClass> out;
    for (const Slope s : {Slope{1, 0}, Slope{0, 1}}) {
        const Dual t = seeds.trace(s);
        if (length_of(s, t) < length_cutoff) out.push_back(make_curve(s, t));
    }

    struct Node {
        Slope left, right, mid;
        Dual t_left, t_right, t_mid;
        double parent_length;
    };
    for (const std::int64_t sign : {1, -1}) {
        std::vector<Node> stack;
        stack.push_back({{0, 1}, {1, 0}, {1, 1}, seeds.trace({0, 1}), seeds.trace({1, 0}),
                         seeds.trace({sign, 1}), 0.0});
        while (!stack.empty()) {
            const Node node = stack.back();
            stack.pop_back();
            const Slope signed_mid{sign * node.mid.p, node.mid.q};
            const double length = length_of(signed_mid, node.t_mid);
            if (length < node.parent_length * (1.0 - 1e-12)) {
                throw Error("curve length is not monotone along the Stern-Brocot branch at slope " +
                            slope_text(signed_mid));
            }
            if (length >= length_cutoff) continue;
            out.push_back(make_curve(signed_mid, node.t_mid));

            const Slope right_child{node.mid.p + node.right.p, node.mid.q + node.right.q};
            const Slope left_child{node.left.p + node.mid.p, node.left.q + node.mid.q};
            stack.push_back({node.mid, node.right, right_child, node.t_mid, node.t_right,
                             node.t_mid * node.t_right - node.t_left, length});
            stack.push_back({node.left, node.mid, left_child, node.t_left, node.t_mid,
                             node.t_left * node.t_mid - node.t_right, length});
        }
    }
    return out;
}

std::vector<CurveBin> bin_curves(const std::vector<CurveClass>& curves, int n_max) {
    std::vector<CurveBin> bins(static_cast<std::size_t>(std::max(n_max, -1) + 1));
    for (int n = 0; n <= n_max; ++n) bins[static_cast<std::size_t>(n)].n = n;
    for (const CurveClass& c : curves) {
        const double twice = 2.0 * c.length;
        if (!(twice < n_max + 1.0)) continue;
        bins[static_cast<std::size_t>(std::floor(twice))].members.push_back(c);
    }
    return bins;
}

double fit_bin_constant(const std::vector<CurveBin>& bins) {
    double m = 0.0;
    for (const CurveBin& bin : bins) {
        const double denom = (bin.n + 1.0) * (bin.n + 1.0);
        m = std::max(m, static_cast<double>(bin.members.size()) / denom);
    }
    return m;
}

BoundaryData boundary_data(const HoledTorusRep& rep) {
    BoundaryData b;
    b.trace = rep.boundary.trace();
    if (rep.cusped()) return b;
    if (!(b.trace.re < -2.0)) {
        std::ostringstream msg;
        msg << "boundary trace " << b.trace.re << " is not below -2";
        throw NotHyperbolic(msg.str());
    }
    b.length = translation_length(b.trace.re);
    b.alpha = margulis_from_trace(b.trace);
    return b;
}

CurveFamily enumerate_bins(const HoledTorusRep& rep, int n_max, Exec exec) {
    if (n_max < 0) throw InputError("n_max must be nonnegative");
    CurveFamily fam;
    fam.n_max = n_max;
    fam.boundary = boundary_data(rep);
    fam.farey_order = enumerate_curves(rep, (n_max + 1.0) / 2.0);
    cross_check_traces(rep, fam.farey_order, exec);
    fam.bins = bin_curves(fam.farey_order, n_max);
    fam.m_hat = fit_bin_constant(fam.bins);

    double kappa = fam.boundary.length > 0 ? std::abs(fam.boundary.alpha) / fam.boundary.length : 0.0;
    for (const CurveClass& c : fam.farey_order) kappa = std::max(kappa, std::abs(c.alpha) / c.length);
    fam.kappa_hat = kappa;
    return fam;
}

CurveFamily enumerate_family(const HoledTorusRep& rep, double tail_tolerance, TailKind kind,
                             int n_ceiling, Exec exec) {
    if (!(tail_tolerance > 0.0)) throw InputError("tail tolerance must be positive");
    if (n_ceiling < 1) throw InputError("bin ceiling must be at least 1");

    int n = std::min(16, n_ceiling);
    while (true) {
        CurveFamily fam = enumerate_bins(rep, n, exec);
        const TailInputs in{fam.m_hat, fam.kappa_hat, fam.boundary.length, fam.boundary.alpha};

        std::optional<int> needed;
        if (fam.m_hat > 0.0) {
            for (int cand = 0; cand <= n_ceiling; ++cand) {
                if (tail_bound(kind, cand, in) <= tail_tolerance) {
                    needed = cand;
                    break;
                }
            }
        }
        if (!needed) {
            if (n >= n_ceiling) {
                std::ostringstream msg;
                msg << "certified tail stays above " << tail_tolerance << " for every N_max <= " << n_ceiling;
                throw NonConvergence(msg.str());
            }
            n = std::min(2 * n, n_ceiling);
            continue;
        }
        if (*needed > n) {
            n = *needed;
            continue;
        }

        // m̂ and κ̂ stay fitted over the full explored range.
        fam.n_max = *needed;
        fam.bins.resize(static_cast<std::size_t>(*needed + 1));
        std::erase_if(fam.farey_order, [&](const CurveClass& c) { return !(2.0 * c.length < *needed + 1.0); });
        fam.tail_bound = tail_bound(kind, *needed, in);
        return fam;
    }
}

} // namespace mml
