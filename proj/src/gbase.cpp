#include <hsinteg/gbase.hpp>

#include <algorithm>
#include <map>
#include <numeric>

#include <hsinteg/errors.hpp>
#include <hsinteg/limits.hpp>

namespace hsinteg
{

ModuleVector::ModuleVector(ContextPtr ctx, std::size_t rank) : ctx_(std::move(ctx))
{
    entries_.assign(rank, Polynomial(ctx_));
}

ModuleVector::ModuleVector(ContextPtr ctx, std::vector<Polynomial> entries) : ctx_(std::move(ctx)), entries_(std::move(entries))
{
    for (const auto &e : entries_) {
        if (!same_context(e.context(), ctx_)) {
            throw UsageError("module vector entries from different contexts");
        }
    }
}

bool ModuleVector::is_zero() const noexcept
{
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial &p) { return p.is_zero(); });
}

ModuleVector &ModuleVector::operator+=(const ModuleVector &other)
{
    if (rank() != other.rank()) {
        throw UsageError("module vector rank mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] += other.entries_[i];
    }
    return *this;
}

ModuleVector &ModuleVector::operator-=(const ModuleVector &other)
{
    if (rank() != other.rank()) {
        throw UsageError("module vector rank mismatch");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        entries_[i] -= other.entries_[i];
    }
    return *this;
}

ModuleVector ModuleVector::scaled(const Polynomial &a) const
{
    ModuleVector out = *this;
    for (auto &e : out.entries_) {
        e = e * a;
    }
    return out;
}

std::string ModuleVector::to_string() const
{
    if (entries_.size() == 1) {
        return entries_[0].to_string();
    }
    std::string out = "(";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i > 0) {
            out += ", ";
        }
        out += entries_[i].to_string();
    }
    return out + ")";
}

bool GroebnerBasis::is_unit_ideal() const
{
    return rank_ == 1 && basis_.size() == 1 && basis_[0][0].is_constant() && !basis_[0][0].is_zero() &&
           ctx_->ring.is_unit(basis_[0][0].leading_term().coeff);
}

namespace
{

struct MTerm {
    Monomial mono;
    std::uint32_t pos;
    Scalar c;
};
using MPoly = std::vector<MTerm>;

// Positions below `split` form the dominant block; inside a block the
// monomial decides first and a lower position wins ties.
class ModOrder
{
public:
    ModOrder(const MonomialOrder &order, std::uint32_t split) : order_(order), split_(split) {}

    int compare(const Monomial &ma, std::uint32_t pa, const Monomial &mb, std::uint32_t pb) const
    {
        const bool ta = pa >= split_;
        const bool tb = pb >= split_;
        if (ta != tb) {
            return ta ? -1 : 1;
        }
        const int c = order_.compare(ma, mb);
        if (c != 0) {
            return c;
        }
        if (pa != pb) {
            return pa < pb ? 1 : -1;
        }
        return 0;
    }
    int compare(const MTerm &a, const MTerm &b) const
    {
        return compare(a.mono, a.pos, b.mono, b.pos);
    }
    bool tagged(std::uint32_t pos) const
    {
        return pos >= split_;
    }
    std::uint32_t split() const
    {
        return split_;
    }

private:
    MonomialOrder order_;
    std::uint32_t split_;
};

class Engine
{
public:
    Engine(const RingSpec &ring, const MonomialOrder &order, std::uint32_t split, bool product_criterion)
        : ring_(ring), ord_(order, split), product_criterion_(product_criterion)
    {
    }

    const ModOrder &order() const
    {
        return ord_;
    }
    const RingSpec &ring() const
    {
        return ring_;
    }

    void sort_terms(MPoly &p) const
    {
        std::sort(p.begin(), p.end(), [this](const MTerm &a, const MTerm &b) { return ord_.compare(a, b) > 0; });
    }

    // p -= c * m * g
    void sub_mul(MPoly &p, const Scalar &c, const Monomial &m, const MPoly &g) const
    {
        if (RingSpec::is_zero(c)) {
            return;
        }
        MPoly out;
        out.reserve(p.size() + g.size());
        std::size_t i = 0;
        std::size_t j = 0;
        Monomial shifted;
        bool have_shifted = false;
        while (i < p.size() || j < g.size()) {
            if (j == g.size()) {
                out.push_back(std::move(p[i++]));
                continue;
            }
            if (!have_shifted) {
                shifted = m * g[j].mono;
                have_shifted = true;
            }
            const int cmp = i == p.size() ? -1 : ord_.compare(p[i].mono, p[i].pos, shifted, g[j].pos);
            if (cmp > 0) {
                out.push_back(std::move(p[i++]));
            } else if (cmp < 0) {
                out.push_back({std::move(shifted), g[j].pos, ring_.neg(ring_.mul(c, g[j].c))});
                ++j;
                have_shifted = false;
            } else {
                Scalar v = ring_.sub(p[i].c, ring_.mul(c, g[j].c));
                if (!RingSpec::is_zero(v)) {
                    out.push_back({std::move(p[i].mono), p[i].pos, std::move(v)});
                }
                ++i;
                ++j;
                have_shifted = false;
            }
        }
        p = std::move(out);
    }

    MPoly shifted(const MPoly &g, const Scalar &c, const Monomial &m) const
    {
        MPoly out;
        out.reserve(g.size());
        for (const auto &t : g) {
            Scalar v = ring_.mul(c, t.c);
            if (!RingSpec::is_zero(v)) {
                out.push_back({m * t.mono, t.pos, std::move(v)});
            }
        }
        return out;
    }

    void normalize(MPoly &p) const
    {
        if (p.empty()) {
            return;
        }
        if (ring_.is_field()) {
            if (RingSpec::is_one(p[0].c)) {
                return;
            }
            const Scalar inv = ring_.inverse(p[0].c);
            for (auto &t : p) {
                t.c = ring_.mul(inv, t.c);
            }
        } else if (sgn(p[0].c) < 0) {
            for (auto &t : p) {
                t.c = -t.c;
            }
        }
    }

    // Leading term of a divides leading term of b, coefficients included.
    bool lead_divides(const MTerm &a, const MTerm &b) const
    {
        if (a.pos != b.pos || !a.mono.divides(b.mono)) {
            return false;
        }
        return ring_.is_field() || ring_.try_divide(b.c, a.c).has_value();
    }

    struct Reducer {
        std::size_t index;
        Scalar q;
        Monomial m;
    };

    std::optional<Reducer> find_reducer(const MTerm &t, const std::vector<const MPoly *> &basis) const
    {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            const MTerm &lt = basis[k]->front();
            if (lt.pos != t.pos || !lt.mono.divides(t.mono)) {
                continue;
            }
            auto q = ring_.try_divide(t.c, lt.c);
            if (q) {
                return Reducer{k, std::move(*q), lt.mono.quotient_of(t.mono)};
            }
        }
        return std::nullopt;
    }

    // Divisibility reduction of every dominant-block term from index `start`
    // on. With `top_only` it stops at the first irreducible term. Quotients
    // are reported through `record` when given.
    void reduce(MPoly &p, std::size_t start, const std::vector<const MPoly *> &basis, bool top_only,
                std::vector<std::vector<Term>> *record = nullptr) const
    {
        std::size_t k = start;
        while (k < p.size()) {
            if (ord_.tagged(p[k].pos)) {
                return;
            }
            check_deadline();
            auto r = find_reducer(p[k], basis);
            if (!r) {
                if (top_only) {
                    return;
                }
                ++k;
                continue;
            }
            if (record) {
                (*record)[r->index].push_back({r->m, r->q});
            }
            sub_mul(p, r->q, r->m, *basis[r->index]);
        }
    }

    // Over Z: replace each dominant-block tail coefficient by its least
    // non-negative residue modulo the smallest leading coefficient among the
    // basis elements whose leading monomial divides it.
    void euclid_tail(MPoly &p, const std::vector<const MPoly *> &basis) const
    {
        std::size_t k = 1;
        while (k < p.size()) {
            if (ord_.tagged(p[k].pos)) {
                return;
            }
            const MPoly *best = nullptr;
            for (const auto *g : basis) {
                const MTerm &lt = g->front();
                if (lt.pos == p[k].pos && lt.mono.divides(p[k].mono) && (!best || lt.c < best->front().c)) {
                    best = g;
                }
            }
            if (!best) {
                ++k;
                continue;
            }
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), p[k].c.get_num_mpz_t(), best->front().c.get_num_mpz_t());
            if (q == 0) {
                ++k;
                continue;
            }
            const Monomial mono = p[k].mono;
            const std::uint32_t pos = p[k].pos;
            sub_mul(p, Scalar(q), best->front().mono.quotient_of(mono), *best);
            if (k < p.size() && p[k].pos == pos && p[k].mono == mono) {
                ++k;
            }
        }
    }

    void add_input(MPoly v)
    {
        reduce(v, 0, live_, false);
        if (v.empty()) {
            return;
        }
        normalize(v);
        if (ord_.tagged(v[0].pos)) {
            harvested_.push_back(std::move(v));
            return;
        }
        insert(std::move(v));
    }

    void complete()
    {
        std::size_t processed = 0;
        while (!pairs_.empty()) {
            check_deadline();
            if (++processed > limits().max_pairs) {
                throw ResourceError("Groebner pair budget of " + std::to_string(limits().max_pairs) + " exhausted");
            }
            auto it = std::min_element(pairs_.begin(), pairs_.end(), [this](const Pair &a, const Pair &b) {
                const int c = ord_.compare(a.lcm, a.pos, b.lcm, b.pos);
                if (c != 0) {
                    return c < 0;
                }
                if (a.gpoly != b.gpoly) {
                    return a.gpoly;
                }
                return std::tie(a.j, a.i) < std::tie(b.j, b.i);
            });
            const Pair pr = *it;
            pairs_.erase(it);
            MPoly s = pair_poly(basis_[pr.i], basis_[pr.j], pr.gpoly);
            reduce(s, 0, live_, false);
            if (s.empty()) {
                continue;
            }
            normalize(s);
            if (ord_.tagged(s[0].pos)) {
                harvested_.push_back(std::move(s));
                continue;
            }
            insert(std::move(s));
        }
    }

    MPoly pair_poly(const MPoly &f, const MPoly &g, bool gpoly) const
    {
        const MTerm &a = f.front();
        const MTerm &b = g.front();
        const Monomial l = a.mono.lcm(b.mono);
        const Monomial mf = a.mono.quotient_of(l);
        const Monomial mg = b.mono.quotient_of(l);
        if (ring_.is_field()) {
            MPoly s = shifted(f, ring_.inverse(a.c), mf);
            sub_mul(s, ring_.inverse(b.c), mg, g);
            return s;
        }
        const mpz_class &ca = a.c.get_num();
        const mpz_class &cb = b.c.get_num();
        if (gpoly) {
            mpz_class d, u, v;
            mpz_gcdext(d.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
            MPoly s = shifted(f, Scalar(u), mf);
            sub_mul(s, Scalar(mpz_class(-v)), mg, g);
            return s;
        }
        mpz_class l_c;
        mpz_lcm(l_c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
        MPoly s = shifted(f, Scalar(mpz_class(l_c / ca)), mf);
        sub_mul(s, Scalar(mpz_class(l_c / cb)), mg, g);
        return s;
    }

    // Minimal, inter-reduced, normalized, sorted descending by leading term.
    std::vector<MPoly> reduced_basis() const
    {
        std::vector<MPoly> kept;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size() && !redundant; ++j) {
                if (j == i || !lead_divides(basis_[j].front(), basis_[i].front())) {
                    continue;
                }
                redundant = !lead_divides(basis_[i].front(), basis_[j].front()) || j < i;
            }
            if (!redundant) {
                kept.push_back(basis_[i]);
            }
        }
        for (std::size_t i = 0; i < kept.size(); ++i) {
            std::vector<const MPoly *> others;
            for (std::size_t j = 0; j < kept.size(); ++j) {
                if (j != i) {
                    others.push_back(&kept[j]);
                }
            }
            if (ring_.is_field()) {
                reduce(kept[i], 1, others, false);
            } else {
                euclid_tail(kept[i], others);
            }
            normalize(kept[i]);
        }
        std::sort(kept.begin(), kept.end(),
                  [this](const MPoly &a, const MPoly &b) { return ord_.compare(a.front(), b.front()) > 0; });
        return kept;
    }

    const std::vector<MPoly> &harvested() const
    {
        return harvested_;
    }

private:
    struct Pair {
        std::size_t i;
        std::size_t j;
        Monomial lcm;
        std::uint32_t pos;
        bool gpoly;
    };

    void insert(MPoly h)
    {
        const std::size_t hi = basis_.size();
        basis_.push_back(std::move(h));
        live_.clear();
        for (const auto &g : basis_) {
            live_.push_back(&g);
        }
        const MTerm &lh = basis_[hi].front();
        if (!ring_.is_field()) {
            for (std::size_t g = 0; g < hi; ++g) {
                const MTerm &lg = basis_[g].front();
                if (lg.pos != lh.pos) {
                    continue;
                }
                const Monomial l = lg.mono.lcm(lh.mono);
                pairs_.push_back({g, hi, l, lh.pos, false});
                if (!ring_.try_divide(lh.c, lg.c) && !ring_.try_divide(lg.c, lh.c)) {
                    pairs_.push_back({g, hi, l, lh.pos, true});
                }
            }
            return;
        }
        // Gebauer-Moeller update.
        std::vector<std::size_t> cand;
        std::vector<Monomial> cand_lcm;
        for (std::size_t g = 0; g < hi; ++g) {
            if (basis_[g].front().pos == lh.pos) {
                cand.push_back(g);
                cand_lcm.push_back(basis_[g].front().mono.lcm(lh.mono));
            }
        }
        auto coprime = [&](std::size_t g) { return product_criterion_ && basis_[g].front().mono.coprime(lh.mono); };
        std::vector<std::size_t> d;
        for (std::size_t a = 0; a < cand.size(); ++a) {
            bool keep = true;
            if (!coprime(cand[a])) {
                for (std::size_t b = a + 1; b < cand.size() && keep; ++b) {
                    keep = !cand_lcm[b].divides(cand_lcm[a]);
                }
                for (std::size_t b : d) {
                    if (!keep) {
                        break;
                    }
                    keep = !cand_lcm[b].divides(cand_lcm[a]);
                }
            }
            if (keep) {
                d.push_back(a);
            }
        }
        std::erase_if(pairs_, [&](const Pair &p) {
            if (p.pos != lh.pos || !lh.mono.divides(p.lcm)) {
                return false;
            }
            const Monomial li = basis_[p.i].front().mono.lcm(lh.mono);
            const Monomial lj = basis_[p.j].front().mono.lcm(lh.mono);
            return !(li == p.lcm) && !(lj == p.lcm);
        });
        for (std::size_t a : d) {
            if (!coprime(cand[a])) {
                pairs_.push_back({cand[a], hi, cand_lcm[a], lh.pos, false});
            }
        }
    }

    RingSpec ring_;
    ModOrder ord_;
    bool product_criterion_;
    std::vector<MPoly> basis_;
    std::vector<const MPoly *> live_;
    std::vector<Pair> pairs_;
    std::vector<MPoly> harvested_;
};

MPoly to_mpoly(const ModuleVector &v, const Engine &eng, std::optional<std::uint32_t> tag)
{
    MPoly out;
    for (std::uint32_t i = 0; i < v.rank(); ++i) {
        for (const auto &t : v[i].terms()) {
            out.push_back({t.mono, i, t.coeff});
        }
    }
    if (tag) {
        out.push_back({Monomial(v.context()->vars.size()), *tag, Scalar(1)});
    }
    eng.sort_terms(out);
    return out;
}

// Block of positions [lo, lo + count) as polynomials.
std::vector<Polynomial> slice(const MPoly &p, const ContextPtr &ctx, std::uint32_t lo, std::uint32_t count)
{
    std::vector<std::vector<Term>> parts(count);
    for (const auto &t : p) {
        if (t.pos >= lo && t.pos < lo + count) {
            parts[t.pos - lo].push_back({t.mono, t.c});
        }
    }
    std::vector<Polynomial> out;
    out.reserve(count);
    for (auto &terms : parts) {
        out.push_back(Polynomial::from_terms(ctx, std::move(terms)));
    }
    return out;
}

void check_vectors(const ContextPtr &ctx, std::size_t rank, std::span<const ModuleVector> gens)
{
    for (const auto &g : gens) {
        if (g.rank() != rank) {
            throw UsageError("module generator of rank " + std::to_string(g.rank()) + ", expected " +
                             std::to_string(rank));
        }
        if (!same_context(g.context(), ctx)) {
            throw UsageError("module generator from a different context");
        }
    }
}

std::vector<MPoly> basis_mpolys(const GroebnerBasis &gb, const Engine &eng)
{
    std::vector<MPoly> out;
    out.reserve(gb.size());
    for (const auto &g : gb.generators()) {
        out.push_back(to_mpoly(g, eng, std::nullopt));
    }
    return out;
}

std::vector<const MPoly *> views(const std::vector<MPoly> &v)
{
    std::vector<const MPoly *> out;
    for (const auto &p : v) {
        out.push_back(&p);
    }
    return out;
}

} // namespace

GroebnerBasis groebner(const ContextPtr &ctx, std::size_t rank, std::vector<ModuleVector> gens)
{
    check_vectors(ctx, rank, gens);
    const auto k = static_cast<std::uint32_t>(gens.size());
    const auto split = static_cast<std::uint32_t>(rank);
    Engine eng(ctx->ring, ctx->order, split, ctx->ring.is_field() && rank == 1);
    for (std::uint32_t i = 0; i < k; ++i) {
        eng.add_input(to_mpoly(gens[i], eng, split + i));
    }
    eng.complete();

    GroebnerBasis gb;
    gb.ctx_ = ctx;
    gb.rank_ = rank;
    gb.originals_ = std::move(gens);
    for (const auto &p : eng.reduced_basis()) {
        gb.basis_.emplace_back(ctx, slice(p, ctx, 0, split));
        gb.transform_.push_back(slice(p, ctx, split, k));
    }
    if (!verify_buchberger(gb)) {
        throw InternalError("Groebner basis failed the Buchberger self-check");
    }
    return gb;
}

GroebnerBasis groebner(const ContextPtr &ctx, std::span<const Polynomial> gens)
{
    std::vector<ModuleVector> vs;
    vs.reserve(gens.size());
    for (const auto &g : gens) {
        vs.emplace_back(ctx, std::vector<Polynomial>{g});
    }
    return groebner(ctx, 1, std::move(vs));
}

LiftedReduction normal_form_with_lift(const ModuleVector &v, const GroebnerBasis &gb)
{
    check_vectors(gb.context(), gb.rank(), std::span(&v, 1));
    const auto &ctx = gb.context();
    const auto split = static_cast<std::uint32_t>(gb.rank());
    Engine eng(ctx->ring, ctx->order, split, false);
    const auto basis = basis_mpolys(gb, eng);
    MPoly p = to_mpoly(v, eng, std::nullopt);
    std::vector<std::vector<Term>> record(basis.size());
    eng.reduce(p, 0, views(basis), false, &record);
    LiftedReduction out{ModuleVector(ctx, slice(p, ctx, 0, split)), {}};
    for (auto &terms : record) {
        out.quotients.push_back(Polynomial::from_terms(ctx, std::move(terms)));
    }
    return out;
}

Polynomial normal_form(const Polynomial &f, const GroebnerBasis &gb)
{
    return normal_form_with_lift(ModuleVector::scalar(f), gb).remainder[0];
}

std::optional<LiftedReduction> module_membership_with_lift(const ModuleVector &v, const GroebnerBasis &gb)
{
    LiftedReduction r = normal_form_with_lift(v, gb);
    if (!r.remainder.is_zero()) {
        return std::nullopt;
    }
    const auto &ctx = gb.context();
    std::vector<Polynomial> q(gb.originals().size(), Polynomial(ctx));
    for (std::size_t i = 0; i < r.quotients.size(); ++i) {
        if (r.quotients[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < q.size(); ++j) {
            if (!gb.transform()[i][j].is_zero()) {
                q[j] += r.quotients[i] * gb.transform()[i][j];
            }
        }
    }
    ModuleVector check(ctx, gb.rank());
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (!q[j].is_zero()) {
            check += gb.originals()[j].scaled(q[j]);
        }
    }
    if (!(check == v)) {
        throw InternalError("membership lift does not reproduce the target");
    }
    return LiftedReduction{std::move(r.remainder), std::move(q)};
}

std::optional<LiftedReduction> module_membership_with_lift(const ModuleVector &v, std::span<const ModuleVector> gens)
{
    const GroebnerBasis gb = groebner(v.context(), v.rank(), std::vector<ModuleVector>(gens.begin(), gens.end()));
    return module_membership_with_lift(v, gb);
}

std::optional<std::vector<Polynomial>> ideal_membership(const Polynomial &f, const GroebnerBasis &gb)
{
    auto r = module_membership_with_lift(ModuleVector::scalar(f), gb);
    if (!r) {
        return std::nullopt;
    }
    return std::move(r->quotients);
}

std::vector<ModuleVector> syzygies(const ContextPtr &ctx, std::size_t rank, std::span<const ModuleVector> gens)
{
    check_vectors(ctx, rank, gens);
    const auto k = static_cast<std::uint32_t>(gens.size());
    const auto split = static_cast<std::uint32_t>(rank);
    Engine eng(ctx->ring, ctx->order, split, false);
    for (std::uint32_t i = 0; i < k; ++i) {
        eng.add_input(to_mpoly(gens[i], eng, split + i));
    }
    eng.complete();
    std::vector<ModuleVector> raw;
    for (const auto &h : eng.harvested()) {
        raw.emplace_back(ctx, slice(h, ctx, split, k));
    }
    const GroebnerBasis syz = groebner(ctx, k, std::move(raw));
    for (const auto &u : syz.generators()) {
        ModuleVector sum(ctx, rank);
        for (std::size_t i = 0; i < k; ++i) {
            if (!u[i].is_zero()) {
                sum += gens[i].scaled(u[i]);
            }
        }
        if (!sum.is_zero()) {
            throw InternalError("computed syzygy does not annihilate the generators");
        }
    }
    return syz.generators();
}

std::vector<Polynomial> ideal_quotient(std::span<const Polynomial> ideal_gens, const Polynomial &g)
{
    if (g.is_zero()) {
        throw UsageError("ideal quotient by the zero polynomial");
    }
    const auto &ctx = g.context();
    std::vector<ModuleVector> gens{ModuleVector::scalar(g)};
    for (const auto &f : ideal_gens) {
        gens.push_back(ModuleVector::scalar(f));
    }
    std::vector<Polynomial> firsts;
    for (const auto &u : syzygies(ctx, 1, gens)) {
        if (!u[0].is_zero()) {
            firsts.push_back(u[0]);
        }
    }
    const GroebnerBasis gb = groebner(ctx, firsts);
    std::vector<Polynomial> out;
    for (const auto &b : gb.generators()) {
        out.push_back(b[0]);
    }
    return out;
}

Polynomial determinant(const std::vector<std::vector<Polynomial>> &m)
{
    const std::size_t n = m.size();
    if (n == 0) {
        throw UsageError("determinant of an empty matrix");
    }
    for (const auto &row : m) {
        if (row.size() != n) {
            throw UsageError("determinant of a non-square matrix");
        }
    }
    if (n == 1) {
        return m[0][0];
    }
    Polynomial det(m[0][0].context());
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c].is_zero()) {
            continue;
        }
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<Polynomial> row;
            for (std::size_t cc = 0; cc < n; ++cc) {
                if (cc != c) {
                    row.push_back(m[r][cc]);
                }
            }
            minor.push_back(std::move(row));
        }
        const Polynomial term = m[0][c] * determinant(minor);
        if (c % 2 == 0) {
            det += term;
        } else {
            det -= term;
        }
    }
    return det;
}

namespace
{

void subsets(std::size_t n, std::size_t e, std::size_t from, std::vector<std::size_t> &cur,
             std::vector<std::vector<std::size_t>> &out)
{
    if (cur.size() == e) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i + (e - cur.size()) <= n; ++i) {
        cur.push_back(i);
        subsets(n, e, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

JacobianData jacobian_ideal(const ContextPtr &ctx, std::span<const Polynomial> ideal_gens)
{
    std::vector<Polynomial> gens;
    for (const auto &f : ideal_gens) {
        if (!f.is_zero()) {
            gens.push_back(f);
        }
    }
    const std::size_t p = gens.size();
    const std::size_t d = ctx->vars.size();
    std::vector<std::vector<Polynomial>> jac(p);
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            jac[j].push_back(gens[j].partial_derivative(i));
        }
    }
    const GroebnerBasis gb = groebner(ctx, gens);
    JacobianData out;
    for (std::size_t e = std::min(p, d); e >= 1; --e) {
        std::vector<std::vector<std::size_t>> rows;
        std::vector<std::vector<std::size_t>> cols;
        std::vector<std::size_t> cur;
        subsets(p, e, 0, cur, rows);
        subsets(d, e, 0, cur, cols);
        std::vector<Polynomial> minors;
        bool outside = false;
        for (const auto &rs : rows) {
            for (const auto &cs : cols) {
                check_deadline();
                std::vector<std::vector<Polynomial>> m;
                for (std::size_t r : rs) {
                    std::vector<Polynomial> row;
                    for (std::size_t c : cs) {
                        row.push_back(jac[r][c]);
                    }
                    m.push_back(std::move(row));
                }
                Polynomial det = determinant(m);
                if (det.is_zero() || std::find(minors.begin(), minors.end(), det) != minors.end()) {
                    continue;
                }
                if (!outside && !normal_form(det, gb).is_zero()) {
                    outside = true;
                }
                minors.push_back(std::move(det));
            }
        }
        if (outside) {
            out.rank = static_cast<unsigned>(e);
            out.minors = std::move(minors);
            break;
        }
    }
    out.generators = out.minors;
    out.generators.insert(out.generators.end(), gens.begin(), gens.end());
    return out;
}

bool verify_buchberger(const GroebnerBasis &gb)
{
    const auto &ctx = gb.context();
    Engine eng(ctx->ring, ctx->order, static_cast<std::uint32_t>(gb.rank()), false);
    const auto basis = basis_mpolys(gb, eng);
    const auto view = views(basis);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const MTerm &a = basis[i].front();
            const MTerm &b = basis[j].front();
            if (a.pos != b.pos) {
                continue;
            }
            const bool divisible = ctx->ring.is_field() || ctx->ring.try_divide(a.c, b.c) || ctx->ring.try_divide(b.c, a.c);
            for (bool gpoly : {false, true}) {
                if (gpoly && divisible) {
                    continue;
                }
                MPoly s = eng.pair_poly(basis[i], basis[j], gpoly);
                eng.reduce(s, 0, view, false);
                if (!s.empty()) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool ideal_contains(const GroebnerBasis &gb, std::span<const Polynomial> gens)
{
    return std::all_of(gens.begin(), gens.end(), [&](const Polynomial &f) { return normal_form(f, gb).is_zero(); });
}

bool module_contains(const GroebnerBasis &gb, std::span<const ModuleVector> gens)
{
    return std::all_of(gens.begin(), gens.end(),
                       [&](const ModuleVector &v) { return normal_form_with_lift(v, gb).remainder.is_zero(); });
}

bool same_ideal(std::span<const Polynomial> a, std::span<const Polynomial> b)
{
    ContextPtr ctx;
    if (!a.empty()) {
        ctx = a.front().context();
    } else if (!b.empty()) {
        ctx = b.front().context();
    } else {
        return true;
    }
    return ideal_contains(groebner(ctx, a), b) && ideal_contains(groebner(ctx, b), a);
}

} // namespace hsinteg
