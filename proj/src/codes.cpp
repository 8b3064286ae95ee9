#include "skewcodes/codes.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>

#include <omp.h>

namespace skewcodes {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

int mod_n(std::int64_t a, int n) { return static_cast<int>(mod_floor(a, n)); }

}  // namespace

void HTParams::validate() const {
    if (n < 2) throw ValidationError("n must be at least 2");
    if (delta < 2) throw ValidationError("delta must be at least 2");
    if (r < 0) throw ValidationError("r must be non-negative");
    if (t1 <= 0 || std::gcd(t1, n) != 1) throw ValidationError("t1 must be positive and coprime to n");
    if (r > 0 && (t2 <= 0 || std::gcd(t2, n) >= delta)) throw ValidationError("gcd(n, t2) must be below delta");
    if (t2 < 0) throw ValidationError("t2 must be non-negative");
    if (delta + r > n - 1) throw ValidationError("delta + r must be at most n - 1");
}

bool DefiningSet::contains(int i) const { return std::binary_search(indices.begin(), indices.end(), mod_n(i, n)); }

DefiningSet ht_set(const HTParams& p, int mu, int s) {
    p.validate();
    std::set<int> idx;
    for (int i = 0; i <= p.delta - 2; ++i)
        for (int l = 0; l <= p.r; ++l)
            idx.insert(mod_n(static_cast<std::int64_t>(p.b) + static_cast<std::int64_t>(i) * p.t1 +
                                 static_cast<std::int64_t>(l) * p.t2,
                             p.n));
    return {{idx.begin(), idx.end()}, p.n, mu, s, false};
}

DefiningSet coset_closure(const DefiningSet& t) {
    std::vector<bool> in(t.n, false);
    for (int i : t.indices)
        for (int j = 0; j < t.s; ++j) in[mod_n(static_cast<std::int64_t>(i) + static_cast<std::int64_t>(j) * t.mu, t.n)] = true;
    DefiningSet out{{}, t.n, t.mu, t.s, true};
    for (int i = 0; i < t.n; ++i)
        if (in[i]) out.indices.push_back(i);
    return out;
}

DefiningSet defining_set_of(const SkewPolynomial& g, const FieldElement& beta, int n, int mu, int s) {
    DefiningSet out{{}, n, mu, s, false};
    FieldElement root = beta;
    for (int i = 0; i < n; ++i, root = g.twist()(root))
        if (right_eval(g, root).is_zero()) out.indices.push_back(i);
    out.closed = coset_closure(out) == DefiningSet{out.indices, n, mu, s, true};
    return out;
}

bool ht_admissible(const DefiningSet& t, const HTParams& p) {
    HTParams q = p;
    q.n = t.n;
    try {
        q.validate();
    } catch (const ValidationError&) {
        return false;
    }
    for (int i : ht_set(q).indices)
        if (!t.contains(i)) return false;
    return true;
}

BoundResult ht_bound(const DefiningSet& t) {
    const int n = t.n;
    BoundResult best;
    if (t.indices.empty() || n < 3) return best;
    std::vector<char> in(n, 0);
    for (int i : t.indices) in[i] = 1;
    // run[start * n + step]: consecutive members start, start+step, ... (capped at n).
    std::vector<int> run(static_cast<std::size_t>(n) * n, 0);
    for (int step = 1; step < n; ++step)
        for (int start = 0; start < n; ++start) {
            int len = 0;
            while (len < n && in[(start + static_cast<std::int64_t>(len) * step) % n]) ++len;
            run[static_cast<std::size_t>(start) * n + step] = len;
        }
    auto better = [&](const HTParams& c, int value) {
        if (value != best.bound) return value > best.bound;
        const auto& w = best.witness;
        return std::tie(c.b, c.delta, c.r, c.t1, c.t2) < std::tie(w.b, w.delta, w.r, w.t1, w.t2);
    };
    std::vector<int> prefix_min(n);
    for (int b = 0; b < n; ++b)
        for (int t1 = 1; t1 < n; ++t1) {
            if (std::gcd(t1, n) != 1) continue;
            for (int t2 = 1; t2 < n; ++t2) {
                int m = n;
                for (int l = 0; l < n; ++l) {
                    m = std::min(m, run[static_cast<std::size_t>((b + static_cast<std::int64_t>(l) * t2) % n) * n + t1]);
                    prefix_min[l] = m;
                }
                const int g2 = std::gcd(t2, n);
                int l_hi = n - 1;
                for (int delta = 2; delta <= n - 1 && prefix_min[0] >= delta - 1; ++delta) {
                    while (l_hi > 0 && prefix_min[l_hi] < delta - 1) --l_hi;
                    int r = g2 < delta ? l_hi : 0;
                    r = std::min(r, n - 1 - delta);
                    const HTParams c{b, delta, r, t1, t2, n};
                    if (better(c, delta + r)) {
                        best.bound = delta + r;
                        best.witness = c;
                    }
                }
            }
        }
    return best;
}

SkewCyclicCode build_code(std::shared_ptr<const Tower> tower, const FieldElement& alpha, const HTParams& params) {
    if (!tower) throw ValidationError("missing tower");
    const int n = static_cast<int>(tower->n());
    if (params.n != n) throw ValidationError("HT parameter n does not match the tower");
    if (alpha.field_ptr() != &tower->M()) throw ValidationError("alpha must lie in M");
    if (!is_normal(alpha, tower->theta())) throw ValidationError("alpha is not a normal element");
    SkewCyclicCode code;
    code.tower = tower;
    code.alpha = alpha;
    code.params = params;
    code.n = n;
    const FrobeniusMap& th = tower->theta();
    code.beta = alpha.inv() * th(alpha);
    code.T = ht_set(params, static_cast<int>(tower->mu()), static_cast<int>(tower->s()));
    code.T_closed = coset_closure(code.T);
    if (static_cast<int>(code.T_closed.size()) == n) throw ValidationError("closure of T is all of C_n");
    auto roots_of = [&](const DefiningSet& d) {
        std::vector<FieldElement> r;
        for (int i : d.indices) r.push_back(th.apply(code.beta, i));
        return r;
    };
    const auto rt = roots_of(code.T), rc = roots_of(code.T_closed);
    code.g_T = lclm_linear(th, rt);
    code.g_bar = lclm_linear(th, rc);
    require(code.g_T.degree() == static_cast<int>(code.T.size()), "deg g_T = |T|");
    require(code.g_bar.degree() == static_cast<int>(code.T_closed.size()), "deg g_bar = |closure|");
    require(code.g_bar == pseudobound(code.g_T, tower->pi(), tower->s()), "g_bar is the pseudobound of g_T");
    require(galois_twist(code.g_bar, tower->pi()) == code.g_bar, "g_bar is fixed by pi");
    require(has_coefficients_in_L(*tower, code.g_bar), "g_bar has coefficients in L");
    require(right_divides(code.g_bar, SkewPolynomial::x_pow_minus_one(th, n)), "g_bar divides x^n - 1");
    code.g_bar_L = descend(*tower, code.g_bar);
    code.dim = n - static_cast<int>(code.T_closed.size());
    code.designed_distance = params.delta + params.r;
    return code;
}

SkewCyclicCode build_bch(std::shared_ptr<const Tower> tower, const FieldElement& alpha, int delta, int t) {
    if (!tower) throw ValidationError("missing tower");
    HTParams p{0, delta, 0, t, 1, static_cast<int>(tower->n())};
    SkewCyclicCode code = build_code(std::move(tower), alpha, p);
    code.bch_t = mod_n(t, code.n);
    return code;
}

SkewPolynomial word_polynomial(const FrobeniusMap& twist, const Word& w) { return SkewPolynomial(twist, w); }

Word encode(const SkewCyclicCode& code, const SkewPolynomial& message) {
    if (message.twist() != code.tower->sigma()) throw ValidationError("message must lie in L[x;sigma]");
    if (message.degree() >= code.dim) throw ValidationError("message degree must be below the dimension");
    const SkewPolynomial c = message * code.g_bar_L;
    Word out(code.n, code.L().zero());
    for (int i = 0; i <= c.degree(); ++i) out[i] = c.coeff(i);
    return out;
}

Word encode(const SkewCyclicCode& code, const Word& message) {
    if (static_cast<int>(message.size()) > code.dim) throw ValidationError("message longer than the dimension");
    return encode(code, word_polynomial(code.tower->sigma(), message));
}

bool is_codeword(const SkewCyclicCode& code, const Word& v) {
    if (static_cast<int>(v.size()) != code.n) throw ValidationError("word has the wrong length");
    return right_divides(code.g_bar_L, word_polynomial(code.tower->sigma(), v));
}

SkewPolynomial message_of(const SkewCyclicCode& code, const Word& codeword) {
    auto [q, r] = right_divmod(word_polynomial(code.tower->sigma(), codeword), code.g_bar_L);
    if (!r.is_zero()) throw ValidationError("word is not a codeword");
    return q;
}

int hamming_weight(const Word& w) {
    return static_cast<int>(std::count_if(w.begin(), w.end(), [](const FieldElement& x) { return !x.is_zero(); }));
}

Matrix parity_check_matrix(const SkewCyclicCode& code) {
    if (!code.bch_t) throw ValidationError("parity check matrix needs a BCH code");
    const int cols = code.params.delta - 1;
    Matrix h(code.M(), code.n, cols);
    const FrobeniusMap& th = code.tower->theta();
    for (int i = 0; i < code.n; ++i)
        for (int j = 0; j < cols; ++j)
            h.set(i, j, th.apply(code.alpha, static_cast<std::int64_t>(i) + static_cast<std::int64_t>(*code.bch_t) * j));
    return h;
}

Matrix generator_matrix(const SkewCyclicCode& code) {
    Matrix g(code.L(), code.dim, code.n);
    SkewPolynomial row = code.g_bar_L;
    const auto x = SkewPolynomial::monomial(code.tower->sigma(), code.L().one(), 1);
    for (int i = 0; i < code.dim; ++i, row = x * row)
        for (int j = 0; j <= row.degree(); ++j) g.set(i, j, row.coeff(j));
    return g;
}

namespace {

std::uint64_t checked_message_count(const SkewCyclicCode& code, std::uint64_t cap) {
    const std::uint64_t q = code.L().order();
    std::uint64_t total = 1;
    for (int i = 0; i < code.dim; ++i) {
        if (total > cap / q) throw CapExceeded("message space exceeds the brute-force cap");
        total *= q;
    }
    if (total > cap) throw CapExceeded("message space exceeds the brute-force cap");
    return total;
}

// Addition on packed L codes without going through digit loops.
struct LAdder {
    explicit LAdder(const Field& f) : f_(f), q_(f.order()) {
        if (f.characteristic() != 2 && q_ <= 4096) {
            table_.resize(q_ * q_);
            for (Code a = 0; a < q_; ++a)
                for (Code b = 0; b < q_; ++b) table_[a * q_ + b] = f.add(a, b);
        }
    }
    Code operator()(Code a, Code b) const {
        if (f_.characteristic() == 2) return a ^ b;
        if (!table_.empty()) return table_[a * q_ + b];
        return f_.add(a, b);
    }
    const Field& f_;
    std::uint64_t q_;
    std::vector<Code> table_;
};

}  // namespace

int min_distance_bruteforce(const SkewCyclicCode& code, std::uint64_t cap, int jobs) {
    checked_message_count(code, cap);
    const Field& L = code.L();
    const std::uint64_t q = L.order();
    const int k = code.dim, n = code.n;
    const Matrix g = generator_matrix(code);
    // mult[(j * q + c) * n + pos] = c * g[j][pos]
    std::vector<Code> mult(static_cast<std::size_t>(k) * q * n);
    for (int j = 0; j < k; ++j)
        for (Code c = 0; c < q; ++c)
            for (int pos = 0; pos < n; ++pos)
                mult[(static_cast<std::size_t>(j) * q + c) * n + pos] = L.mul(c, g.code(j, pos));
    const LAdder add(L);

    // Messages normalised so the highest nonzero digit is 1; split on the next digit.
    struct Task {
        int lead;
        std::int64_t next;  // value of digit lead-1, or -1 when lead == 0
    };
    std::vector<Task> tasks;
    for (int lead = 0; lead < k; ++lead) {
        if (lead == 0) {
            tasks.push_back({0, -1});
        } else {
            for (Code c = 0; c < q; ++c) tasks.push_back({lead, static_cast<std::int64_t>(c)});
        }
    }
    std::atomic<int> best{n + 1};
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (std::size_t ti = 0; ti < tasks.size(); ++ti) {
        const Task task = tasks[ti];
        if (best.load(std::memory_order_relaxed) <= 1) continue;
        const int free_digits = task.lead >= 1 ? task.lead - 1 : 0;
        std::vector<std::vector<Code>> partial(free_digits + 1, std::vector<Code>(n));
        auto& base = partial[free_digits];
        for (int pos = 0; pos < n; ++pos) {
            Code v = mult[(static_cast<std::size_t>(task.lead) * q + 1) * n + pos];
            if (task.next >= 0)
                v = add(v, mult[(static_cast<std::size_t>(task.lead - 1) * q + static_cast<Code>(task.next)) * n + pos]);
            base[pos] = v;
        }
        auto leaf = [&](const std::vector<Code>& w) {
            int cur = best.load(std::memory_order_relaxed);
            int wt = 0;
            for (int pos = 0; pos < n && wt < cur; ++pos) wt += w[pos] != 0;
            while (wt < cur && !best.compare_exchange_weak(cur, wt, std::memory_order_relaxed)) {
            }
        };
        std::function<void(int)> descend_level = [&](int level) {
            // partial[level] holds the sum of the fixed digits >= level.
            if (level == 0) {
                leaf(partial[0]);
                return;
            }
            const int j = level - 1;
            auto& dst = partial[level - 1];
            const auto& src = partial[level];
            for (Code c = 0; c < q; ++c) {
                const Code* row = &mult[(static_cast<std::size_t>(j) * q + c) * n];
                for (int pos = 0; pos < n; ++pos) dst[pos] = add(src[pos], row[pos]);
                descend_level(level - 1);
            }
        };
        descend_level(free_digits);
    }
    return best.load();
}

int min_distance_bruteforce_serial(const SkewCyclicCode& code, std::uint64_t cap) {
    const std::uint64_t total = checked_message_count(code, cap);
    const Field& L = code.L();
    const std::uint64_t q = L.order();
    int best = code.n + 1;
    std::vector<Code> digits(code.dim, 0);
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        std::uint64_t v = idx;
        for (int j = 0; j < code.dim; ++j) {
            digits[j] = v % q;
            v /= q;
        }
        const Word c = encode(code, SkewPolynomial::from_codes(code.tower->sigma(), digits));
        best = std::min(best, hamming_weight(c));
    }
    return best;
}

int min_distance_supports(const SkewCyclicCode& code) {
    if (code.tower->s() != 1) throw ValidationError("support enumeration needs an s = 1 tower");
    const int n = code.n;
    const int r = static_cast<int>(code.T_closed.size());
    const FrobeniusMap& th = code.tower->theta();
    std::vector<std::vector<FieldElement>> rows(n);
    for (int i = 0; i < n; ++i)
        for (int k : code.T_closed.indices) rows[i].push_back(th.apply(code.alpha, i + k));
    for (int w = 1; w <= r + 1; ++w) {
        std::vector<int> sel(w);
        std::iota(sel.begin(), sel.end(), 0);
        for (;;) {
            Matrix m(code.M(), w, r);
            for (int a = 0; a < w; ++a)
                for (int b = 0; b < r; ++b) m.set(a, b, rows[sel[a]][b]);
            if (static_cast<int>(rank(m)) < w) return w;
            int pos = w - 1;
            while (pos >= 0 && sel[pos] == n - w + pos) --pos;
            if (pos < 0) break;
            ++sel[pos];
            for (int a = pos + 1; a < w; ++a) sel[a] = sel[a - 1] + 1;
        }
    }
    return r + 1;
}

}  // namespace skewcodes
