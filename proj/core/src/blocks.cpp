#include "blockreg/blocks.hpp"

#include <algorithm>

namespace blockreg {

std::string to_string(const Block& b)
{
    std::string s;
    for (size_t i = 0; i < b.members.size(); ++i) {
        if (i)
            s += " ";
        s += "O" + to_string(b.members[i]);
    }
    return s;
}

int BlockCollection::total_members() const
{
    int n = 0;
    for (const Block& b : blocks)
        n += static_cast<int>(b.members.size());
    return n;
}

std::vector<MultiDegree> BlockCollection::flatten() const
{
    std::vector<MultiDegree> out;
    out.reserve(total_members());
    for (const Block& b : blocks)
        out.insert(out.end(), b.members.begin(), b.members.end());
    return out;
}

int BlockCollection::block_of(int u) const
{
    for (size_t j = 0; j < blocks.size(); ++j) {
        u -= static_cast<int>(blocks[j].members.size());
        if (u < 0)
            return static_cast<int>(j);
    }
    throw std::invalid_argument("member index out of range");
}

namespace {

// All a with -n_i <= a_i <= 0 and sum a_i = total, in lexicographic order.
void enumerate_degrees(const std::vector<int>& dims, int total, size_t i, MultiDegree& cur,
                       std::vector<MultiDegree>& out)
{
    if (i == dims.size()) {
        if (total == 0)
            out.push_back(cur);
        return;
    }
    for (int a = -dims[i]; a <= 0; ++a) {
        cur.a[i] = a;
        enumerate_degrees(dims, total - a, i + 1, cur, out);
    }
}

} // namespace

BlockCollection fundamental_collection(const Space& space)
{
    BlockCollection c{space, {}, 0};
    c.blocks.resize(space.dim() + 1);
    for (int j = 0; j <= space.dim(); ++j) {
        MultiDegree cur;
        cur.a.assign(space.factors(), 0);
        enumerate_degrees(space.dims(), j - space.dim(), 0, cur, c.blocks[j].members);
        std::sort(c.blocks[j].members.begin(), c.blocks[j].members.end());
    }
    return c;
}

namespace {

// i = j + k(d+1) with 0 <= j <= d.
void helix_split(int dim, int i, int& j, int& k)
{
    int period = dim + 1;
    k = i >= 0 ? i / period : -((-i + period - 1) / period);
    j = i - k * period;
}

} // namespace

Block helix_block(const Space& space, int i)
{
    int j, k;
    helix_split(space.dim(), i, j, k);
    Block base = fundamental_collection(space).blocks[j];
    MultiDegree shift = space.period_twist() * k;
    for (MultiDegree& m : base.members)
        m = m + shift;
    return base;
}

BlockCollection helix_window(const Space& space, int base)
{
    BlockCollection c{space, {}, base};
    c.blocks.reserve(space.dim() + 1);
    for (int j = 0; j <= space.dim(); ++j)
        c.blocks.push_back(helix_block(space, base + j));
    return c;
}

std::vector<DualBlock> aligned_window_dual(const Space& space, int k)
{
    int d = space.dim();
    const MultiDegree shift = space.period_twist() * k;
    std::vector<DualBlock> out(d + 1);
    for (int j = 0; j <= d; ++j) {
        Block block = helix_block(space, k * (d + 1) + d - j);
        for (const MultiDegree& m : block.members) {
            std::vector<FactorSheaf> fs;
            fs.reserve(space.factors());
            for (int i = 0; i < space.factors(); ++i) {
                int a = m[i] - shift[i];
                fs.push_back(wedge_tangent(space.dims()[i], -a, m[i]));
            }
            out[j].members.emplace_back(std::move(fs));
        }
    }
    return out;
}

std::vector<FactorSheaf> projective_window_dual(int n, int top_degree)
{
    std::vector<FactorSheaf> out;
    out.reserve(n + 1);
    for (int j = 0; j <= n; ++j)
        out.push_back(wedge_tangent(n, j, top_degree - j));
    return out;
}

namespace {

CohomologyTable member_ext(const Space& space, const MultiDegree& from, const MultiDegree& to)
{
    SplitSheaf target;
    target.add(1, BoxProduct::line_bundle(space, to));
    return ext_table(space, BoxProduct::line_bundle(space, from), target);
}

} // namespace

ExceptionalReport verify_exceptional_structure(const Space& space, const BlockCollection& c)
{
    ExceptionalReport report;
    auto fail = [&](const MultiDegree& from, const MultiDegree& to, int q, Int dim,
                    const std::string& rule) {
        report.pass = false;
        if (!report.first)
            report.first = ExceptionalViolation{from, to, q, dim, rule};
    };

    std::vector<MultiDegree> members = c.flatten();
    for (size_t u = 0; u < members.size(); ++u) {
        for (size_t v = 0; v < members.size(); ++v) {
            CohomologyTable t = member_ext(space, members[u], members[v]);
            ++report.pairs_checked;
            int bu = c.block_of(static_cast<int>(u));
            int bv = c.block_of(static_cast<int>(v));
            if (u == v) {
                if (t[0] != 1)
                    fail(members[u], members[v], 0, t[0], "member must have 1-dimensional Hom to itself");
                for (int q = 1; q <= t.top(); ++q)
                    if (t[q] != 0)
                        fail(members[u], members[v], q, t[q], "member has higher self-extensions");
            } else if (bu == bv) {
                for (int q = 0; q <= t.top(); ++q)
                    if (t[q] != 0)
                        fail(members[u], members[v], q, t[q], "members of one block must be orthogonal");
            } else if (bu > bv) {
                for (int q = 0; q <= t.top(); ++q)
                    if (t[q] != 0)
                        fail(members[u], members[v], q, t[q], "no Ext from later blocks back to earlier ones");
            } else {
                for (int q = 1; q <= t.top(); ++q)
                    if (t[q] != 0)
                        fail(members[u], members[v], q, t[q], "no higher Ext from earlier blocks to later ones");
            }
        }
    }
    return report;
}

bool GramMatrix::unitriangular() const
{
    for (int u = 0; u < size(); ++u) {
        if (g[u][u] != 1)
            return false;
        for (int v = 0; v < u; ++v)
            if (g[u][v] != 0)
                return false;
    }
    return true;
}

GramMatrix gram_matrix(const Space& space, const BlockCollection& c)
{
    std::vector<MultiDegree> members = c.flatten();
    GramMatrix m;
    m.g.assign(members.size(), std::vector<Int>(members.size(), 0));
    for (size_t u = 0; u < members.size(); ++u)
        for (size_t v = 0; v < members.size(); ++v)
            m.g[u][v] = euler_pairing(space, members[u], members[v]);
    return m;
}

K0Class& K0Class::operator+=(const K0Class& o)
{
    if (coords.size() != o.coords.size())
        throw std::invalid_argument("K0 coordinate length mismatch");
    for (size_t i = 0; i < coords.size(); ++i)
        coords[i] = checked_add(coords[i], o.coords[i]);
    return *this;
}

K0Class& K0Class::operator-=(const K0Class& o)
{
    if (coords.size() != o.coords.size())
        throw std::invalid_argument("K0 coordinate length mismatch");
    for (size_t i = 0; i < coords.size(); ++i)
        coords[i] = checked_sub(coords[i], o.coords[i]);
    return *this;
}

K0Class K0Class::operator*(Int c) const
{
    K0Class out = *this;
    for (Int& x : out.coords)
        x = checked_mul(x, c);
    return out;
}

K0Class K0Class::operator-() const
{
    return *this * -1;
}

Int K0Class::rank() const
{
    Int r = 0;
    for (Int x : coords)
        r = checked_add(r, x);
    return r;
}

std::string to_string(const K0Class& x)
{
    std::string s = "[";
    for (size_t i = 0; i < x.coords.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(x.coords[i]);
    }
    return s + "]";
}

namespace {

// [box] expanded over line bundles: product of the per-factor expansions.
void expand_box(const BoxProduct& box, size_t i, MultiDegree& deg, Int coeff,
                std::vector<std::pair<MultiDegree, Int>>& out)
{
    if (i == box.factor_list().size()) {
        out.emplace_back(deg, coeff);
        return;
    }
    for (const auto& [d, c] : k0_line_expansion(box.factor(static_cast<int>(i)))) {
        deg.a[i] = d;
        expand_box(box, i + 1, deg, checked_mul(coeff, c), out);
    }
}

std::vector<std::pair<MultiDegree, Int>> line_expansion(const BoxProduct& box)
{
    std::vector<std::pair<MultiDegree, Int>> out;
    MultiDegree deg;
    deg.a.assign(box.factors(), 0);
    expand_box(box, 0, deg, 1, out);
    return out;
}

// chi(O(a), box) through the line-bundle expansion of the target.
Int chi_degree_box(const Space& space, const MultiDegree& a, const BoxProduct& box)
{
    Int chi = 0;
    for (const auto& [deg, coeff] : line_expansion(box))
        chi = checked_add(chi, checked_mul(coeff, euler_pairing(space, a, deg)));
    return chi;
}

// Solve G x = c for upper unitriangular G.
std::vector<Int> solve_upper_unitriangular(const std::vector<std::vector<Int>>& g,
                                           std::vector<Int> c)
{
    int n = static_cast<int>(g.size());
    std::vector<Int> x(n, 0);
    for (int u = n - 1; u >= 0; --u) {
        Int s = c[u];
        for (int v = u + 1; v < n; ++v)
            s = checked_sub(s, checked_mul(g[u][v], x[v]));
        x[u] = s;
    }
    return x;
}

} // namespace

K0Class k0_class(const Space& space, const BoxProduct& box)
{
    SplitSheaf f;
    f.add(1, box);
    return k0_class(space, f);
}

K0Class k0_class(const Space& space, const MultiDegree& line_bundle)
{
    return k0_class(space, BoxProduct::line_bundle(space, line_bundle));
}

K0Class k0_class(const Space& space, const SplitSheaf& sheaf)
{
    for (const SplitSheaf::Term& t : sheaf.terms())
        check_arity(space, t.box);

    std::vector<MultiDegree> basis = fundamental_collection(space).flatten();
    std::vector<Int> rhs(basis.size(), 0);
    for (const SplitSheaf::Term& t : sheaf.terms())
        for (size_t u = 0; u < basis.size(); ++u)
            rhs[u] = checked_add(rhs[u],
                                 checked_mul(t.mult, chi_degree_box(space, basis[u], t.box)));

    GramMatrix g = gram_matrix(space, fundamental_collection(space));
    return K0Class{solve_upper_unitriangular(g.g, std::move(rhs))};
}

Int k0_pairing(const Space& space, const K0Class& x, const K0Class& y)
{
    std::vector<MultiDegree> basis = fundamental_collection(space).flatten();
    if (x.coords.size() != basis.size() || y.coords.size() != basis.size())
        throw std::invalid_argument("K0 coordinate length mismatch");
    Int chi = 0;
    for (size_t u = 0; u < basis.size(); ++u) {
        if (x.coords[u] == 0)
            continue;
        for (size_t v = 0; v < basis.size(); ++v) {
            if (y.coords[v] == 0)
                continue;
            Int term = checked_mul(euler_pairing(space, basis[u], basis[v]),
                                   checked_mul(x.coords[u], y.coords[v]));
            chi = checked_add(chi, term);
        }
    }
    return chi;
}

K0Class mutation_class(const Space& space, MutationSide side, const K0Class& a,
                       const K0Class& b, std::optional<Int> chi_ab)
{
    Int chi = chi_ab ? *chi_ab : k0_pairing(space, a, b);
    K0Class out = side == MutationSide::Left ? a * chi : b * chi;
    out -= side == MutationSide::Left ? b : a;
    return out;
}

K0Class mutate_through_block(const Space& space, const K0Class& c, const Block& block)
{
    K0Class out = -c;
    for (const MultiDegree& f : block.members) {
        K0Class fc = k0_class(space, f);
        out += fc * k0_pairing(space, c, fc);
    }
    return out;
}

std::vector<K0Class> left_dual_classes_k0(const Space& space, int window_base)
{
    BlockCollection window = helix_window(space, window_base);
    std::vector<MultiDegree> members = window.flatten();
    int n = static_cast<int>(members.size());
    GramMatrix g = gram_matrix(space, window);

    std::vector<K0Class> member_classes;
    member_classes.reserve(n);
    for (const MultiDegree& m : members)
        member_classes.push_back(k0_class(space, m));

    int d = space.dim();
    std::vector<K0Class> out;
    out.reserve(n);
    // Dual blocks run from the top block down; j is the block distance.
    for (int j = 0; j <= d; ++j) {
        int block = d - j;
        int offset = 0;
        for (int b = 0; b < block; ++b)
            offset += static_cast<int>(window.blocks[b].members.size());
        for (size_t m = 0; m < window.blocks[block].members.size(); ++m) {
            // Solve G^T y = (-1)^j e_{v0}: forward substitution, G^T lower
            // unitriangular.
            int v0 = offset + static_cast<int>(m);
            std::vector<Int> y(n, 0);
            for (int u = 0; u < n; ++u) {
                Int s = u == v0 ? (j % 2 == 0 ? 1 : -1) : 0;
                for (int v = 0; v < u; ++v)
                    s = checked_sub(s, checked_mul(g.g[v][u], y[v]));
                y[u] = s;
            }
            K0Class h{std::vector<Int>(member_classes.front().coords.size(), 0)};
            for (int u = 0; u < n; ++u)
                h += member_classes[u] * y[u];
            out.push_back(std::move(h));
        }
    }
    return out;
}

} // namespace blockreg
