#include "autoseq/automata.hpp"

#include <algorithm>
#include <deque>

namespace autoseq {

namespace {

constexpr int kMaxClasses = 4096;

struct ClassMeta {
    long depth = 0;   // a
    long offset = 0;  // b, with the class sequence n -> v(r^a n + b)
};

Seq window_values(const Seq& v, long r_pow, long offset, long count) {
    Seq out;
    out.reserve(static_cast<std::size_t>(count));
    for (long n = 1; n <= count; ++n)
        out.push_back(v[static_cast<std::size_t>(r_pow * n + offset - 1)]);
    return out;
}

bool agree_on(const Seq& a, const Seq& b, long len) {
    for (long i = 0; i < len; ++i)
        if (!(a[static_cast<std::size_t>(i)] == b[static_cast<std::size_t>(i)])) return false;
    return true;
}

}  // namespace

KernelResult kernel_explore(const Seq& v, long r, long horizon, long min_window) {
    if (r < 2) throw Error(ErrorKind::InvalidArgument, "r must be >= 2");
    if (horizon < 1) throw Error(ErrorKind::InvalidArgument, "horizon must be >= 1");
    const long len = static_cast<long>(v.size());
    if (len < r * horizon + r)
        throw Error(ErrorKind::PrefixTooShort,
                    "kernel exploration needs a prefix of length >= r*horizon + r");
    min_window = std::max({min_window, r - 1, 1L});

    KernelResult k;
    k.r = r;
    k.horizon = horizon;
    k.min_window = min_window;
    k.closed = true;

    std::vector<ClassMeta> meta;
    std::deque<int> queue;

    k.classes.push_back(window_values(v, 1, 0, len));
    k.transitions.emplace_back(static_cast<std::size_t>(r), -1);
    meta.push_back({0, 0});
    queue.push_back(0);

    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        const ClassMeta cm = meta[static_cast<std::size_t>(c)];
        long r_pow = 1;
        for (long i = 0; i < cm.depth; ++i) r_pow *= r;
        for (long j = 0; j < r; ++j) {
            long offset = cm.offset + j * r_pow;
            long child_pow = r_pow * r;
            long window = (len - offset) / child_pow;
            if (window < 1) {
                k.closed = false;
                continue;
            }
            Seq cand = window_values(v, child_pow, offset, window);
            int target = -1;
            for (std::size_t e = 0; e < k.classes.size(); ++e) {
                long cmp = std::min<long>(window, static_cast<long>(k.classes[e].size()));
                if (agree_on(cand, k.classes[e], cmp)) {
                    if (cmp < min_window) k.closed = false;
                    target = static_cast<int>(e);
                    break;
                }
            }
            if (target < 0) {
                if (static_cast<int>(k.classes.size()) >= kMaxClasses) {
                    k.closed = false;
                    continue;
                }
                target = static_cast<int>(k.classes.size());
                k.classes.push_back(std::move(cand));
                k.transitions.emplace_back(static_cast<std::size_t>(r), -1);
                meta.push_back({cm.depth + 1, offset});
                if (window >= min_window)
                    queue.push_back(target);
                else
                    k.closed = false;  // too short to expand or trust
            }
            k.transitions[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)] = target;
        }
    }

    for (const auto& row : k.transitions)
        for (int t : row)
            if (t < 0) k.closed = false;
    return k;
}

DFAO synthesize_dfao(const KernelResult& k) {
    if (!k.closed)
        throw Error(ErrorKind::KernelNotClosed, "kernel did not close at this horizon");
    DFAO d;
    d.r = k.r;
    d.initial = k.root;
    d.transitions = k.transitions;
    d.small_values.reserve(k.classes.size());
    for (const auto& cls : k.classes) {
        if (static_cast<long>(cls.size()) < k.r - 1)
            throw Error(ErrorKind::KernelNotClosed, "class window shorter than r-1");
        d.small_values.emplace_back(cls.begin(), cls.begin() + (k.r - 1));
    }
    return d;
}

FieldElement run_dfao(const DFAO& d, long n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "sequences are 1-indexed");
    int state = d.initial;
    while (n >= d.r) {
        long digit = n % d.r;
        n /= d.r;
        state = d.transitions[static_cast<std::size_t>(state)][static_cast<std::size_t>(digit)];
    }
    return d.small_values[static_cast<std::size_t>(state)][static_cast<std::size_t>(n - 1)];
}

std::vector<ShiftRelation> detect_shift_relation(const Seq& v, long r, long max_m) {
    if (r < 2) throw Error(ErrorKind::InvalidArgument, "r must be >= 2");
    const long len = static_cast<long>(v.size());
    std::vector<ShiftRelation> found;
    for (long i = 0; i < r; ++i) {
        for (long m = 0; m <= max_m; ++m) {
            // constraints v(r(n+m)+i) = sigma(v(n)) for all checkable n
            long n_max = (len - i) / r - m;
            if (n_max < 64)
                throw Error(ErrorKind::PrefixTooShort,
                            "fewer than 64 checkable points for a shift candidate");
            std::vector<int> image(static_cast<std::size_t>(v[0].ctx()->q()), -1);
            bool consistent = true;
            for (long n = 1; n <= n_max && consistent; ++n) {
                std::uint32_t x = v[static_cast<std::size_t>(n - 1)].index();
                std::uint32_t y = v[static_cast<std::size_t>(r * (n + m) + i - 1)].index();
                int& slot = image[x];
                if (slot < 0)
                    slot = static_cast<int>(y);
                else if (slot != static_cast<int>(y))
                    consistent = false;
            }
            if (!consistent) continue;
            // injectivity on the observed alphabet
            std::vector<bool> hit(image.size(), false);
            bool injective = true;
            ShiftRelation rel;
            rel.i = i;
            rel.m = m;
            const FieldCtx* ctx = v[0].ctx();
            for (std::size_t x = 0; x < image.size(); ++x) {
                if (image[x] < 0) continue;
                if (hit[static_cast<std::size_t>(image[x])]) {
                    injective = false;
                    break;
                }
                hit[static_cast<std::size_t>(image[x])] = true;
                rel.sigma.emplace_back(ctx->from_index(static_cast<long>(x)),
                                       ctx->from_index(image[x]));
            }
            if (injective) found.push_back(std::move(rel));
        }
    }
    return found;
}

std::optional<std::pair<long, long>> detect_ultimate_periodicity(const Seq& v,
                                                                 long max_preperiod,
                                                                 long max_period) {
    if (max_preperiod < 0 || max_period < 1)
        throw Error(ErrorKind::InvalidArgument, "bad periodicity bounds");
    const long len = static_cast<long>(v.size());
    if (len < max_preperiod + 2 * max_period)
        throw Error(ErrorKind::PrefixTooShort,
                    "prefix must cover max_preperiod + 2*max_period");
    std::optional<std::pair<long, long>> best;
    for (long per = 1; per <= max_period; ++per) {
        long last_mismatch = 0;
        for (long n = len - per; n >= 1; --n) {
            if (!(v[static_cast<std::size_t>(n - 1)] ==
                  v[static_cast<std::size_t>(n + per - 1)])) {
                last_mismatch = n;
                break;
            }
        }
        if (last_mismatch > max_preperiod) continue;
        std::pair<long, long> cand{last_mismatch, per};
        if (!best || cand < *best) best = cand;
    }
    return best;
}

AutomaticityReport automaticity_report(const Seq& v, long r) {
    const long len = static_cast<long>(v.size());
    AutomaticityReport rep;
    rep.r = r;

    std::vector<Seq> decimations;
    for (long j = 0; j < r; ++j) {
        Seq u;
        for (long n = 1; r * n + j <= len; ++n)
            u.push_back(v[static_cast<std::size_t>(r * n + j - 1)]);
        decimations.push_back(std::move(u));
    }

    long nonperiodic_count = 0;
    for (long j = 0; j < r; ++j) {
        const Seq& u = decimations[static_cast<std::size_t>(j)];
        long bound = static_cast<long>(u.size()) / 3;
        bool periodic = false;
        if (bound >= 1) {
            auto p = detect_ultimate_periodicity(u, bound, bound);
            periodic = p.has_value();
        }
        rep.decimation_periodic.push_back(periodic);
        if (!periodic) {
            ++nonperiodic_count;
            rep.nonperiodic_digit = j;
        }
    }
    if (nonperiodic_count != 1) rep.nonperiodic_digit.reset();

    if (rep.nonperiodic_digit) {
        try {
            rep.relations =
                detect_shift_relation(decimations[static_cast<std::size_t>(*rep.nonperiodic_digit)], r, 4);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::PrefixTooShort) throw;
        }
        rep.shift_certificate = !rep.relations.empty();
    }

    long horizon = (len - r) / r;
    if (horizon >= 1) {
        KernelResult k = kernel_explore(v, r, horizon);
        rep.kernel_closed = k.closed;
        rep.class_count = static_cast<long>(k.classes.size());
    }
    return rep;
}

std::string export_dot(const DFAO& d) {
    std::string out = "digraph dfao {\n  rankdir=LR;\n  node [shape=circle];\n";
    out += "  init [shape=point];\n";
    for (std::size_t s = 0; s < d.transitions.size(); ++s) {
        out += "  s" + std::to_string(s) + " [label=\"" + std::to_string(s) + " | ";
        for (std::size_t i = 0; i < d.small_values[s].size(); ++i) {
            if (i) out += ";";
            out += d.small_values[s][i].to_string();
        }
        out += "\"];\n";
    }
    out += "  init -> s" + std::to_string(d.initial) + ";\n";
    for (std::size_t s = 0; s < d.transitions.size(); ++s)
        for (std::size_t j = 0; j < d.transitions[s].size(); ++j)
            out += "  s" + std::to_string(s) + " -> s" + std::to_string(d.transitions[s][j]) +
                   " [label=\"" + std::to_string(j) + "\"];\n";
    out += "}\n";
    return out;
}

}  // namespace autoseq
