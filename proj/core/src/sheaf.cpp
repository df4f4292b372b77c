#include "blockreg/sheaf.hpp"

#include <algorithm>

namespace blockreg {

BoxProduct::BoxProduct(std::vector<FactorSheaf> factors) : fs_(std::move(factors))
{
    if (fs_.empty())
        throw std::invalid_argument("a box product needs at least one factor");
}

BoxProduct BoxProduct::line_bundle(const Space& space, const MultiDegree& d)
{
    if (d.size() != space.factors())
        throw std::invalid_argument("multidegree has " + std::to_string(d.size())
                                    + " entries, space " + space.name() + " has "
                                    + std::to_string(space.factors()) + " factors");
    std::vector<FactorSheaf> fs;
    fs.reserve(d.size());
    for (int i = 0; i < d.size(); ++i)
        fs.emplace_back(space.dims()[i], 0, d[i]);
    return BoxProduct(std::move(fs));
}

bool BoxProduct::is_line_bundle() const
{
    return std::all_of(fs_.begin(), fs_.end(),
                       [](const FactorSheaf& f) { return f.is_line_bundle(); });
}

MultiDegree BoxProduct::degree() const
{
    MultiDegree d;
    d.a.reserve(fs_.size());
    for (const FactorSheaf& f : fs_) {
        if (!f.is_line_bundle())
            throw std::invalid_argument("degree() needs a line bundle, got " + to_string(*this));
        d.a.push_back(f.twist());
    }
    return d;
}

BoxProduct BoxProduct::dual() const
{
    std::vector<FactorSheaf> fs;
    fs.reserve(fs_.size());
    for (const FactorSheaf& f : fs_)
        fs.push_back(f.dual());
    return BoxProduct(std::move(fs));
}

BoxProduct BoxProduct::twisted(const MultiDegree& t) const
{
    if (t.size() != factors())
        throw std::invalid_argument("twist arity mismatch");
    std::vector<FactorSheaf> fs;
    fs.reserve(fs_.size());
    for (int i = 0; i < factors(); ++i)
        fs.push_back(fs_[i].twisted(t[i]));
    return BoxProduct(std::move(fs));
}

std::string to_string(const BoxProduct& b)
{
    if (b.is_line_bundle() && b.factors() > 1) {
        std::string s = "O(";
        for (int i = 0; i < b.factors(); ++i) {
            if (i)
                s += ",";
            s += std::to_string(b.factor(i).twist());
        }
        return s + ")";
    }
    std::string s;
    for (int i = 0; i < b.factors(); ++i) {
        if (i)
            s += "#";
        s += to_string(b.factor(i));
    }
    return s;
}

void SplitSheaf::add(Int mult, const BoxProduct& box)
{
    if (mult < 0)
        throw std::invalid_argument("multiplicity must be positive");
    if (mult == 0)
        return;
    if (!terms_.empty() && terms_.front().box.factors() != box.factors())
        throw std::invalid_argument("mixed arities in one sheaf");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), box,
                               [](const Term& t, const BoxProduct& b) { return t.box < b; });
    if (it != terms_.end() && it->box == box)
        it->mult = checked_add(it->mult, mult);
    else
        terms_.insert(it, Term{mult, box});
}

bool SplitSheaf::all_line_bundles() const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.box.is_line_bundle(); });
}

SplitSheaf SplitSheaf::twisted(const MultiDegree& t) const
{
    SplitSheaf out;
    for (const Term& term : terms_)
        out.add(term.mult, term.box.twisted(t));
    return out;
}

SplitSheaf SplitSheaf::direct_sum(const SplitSheaf& other) const
{
    SplitSheaf out = *this;
    for (const Term& term : other.terms_)
        out.add(term.mult, term.box);
    return out;
}

bool SplitSheaf::operator==(const SplitSheaf& o) const
{
    if (terms_.size() != o.terms_.size())
        return false;
    for (size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mult != o.terms_[i].mult || !(terms_[i].box == o.terms_[i].box))
            return false;
    return true;
}

std::string to_string(const SplitSheaf& f)
{
    if (f.is_zero())
        return "0";
    std::string s;
    for (size_t i = 0; i < f.terms().size(); ++i) {
        const SplitSheaf::Term& t = f.terms()[i];
        if (i)
            s += " + ";
        if (t.mult != 1)
            s += std::to_string(t.mult) + "*";
        s += to_string(t.box);
    }
    return s;
}

void check_arity(const Space& space, const BoxProduct& box)
{
    if (box.factors() != space.factors())
        throw std::invalid_argument("sheaf has " + std::to_string(box.factors())
                                    + " factors, space " + space.name() + " has "
                                    + std::to_string(space.factors()));
    for (int i = 0; i < box.factors(); ++i)
        if (box.factor(i).dim() != space.dims()[i])
            throw std::invalid_argument("factor " + std::to_string(i + 1) + " lives on P"
                                        + std::to_string(box.factor(i).dim()) + ", expected P"
                                        + std::to_string(space.dims()[i]));
}

bool CohomologyTable::is_zero() const
{
    return std::all_of(h.begin(), h.end(), [](Int v) { return v == 0; });
}

bool CohomologyTable::zero_in_positive_degrees() const
{
    return std::all_of(h.begin() + 1, h.end(), [](Int v) { return v == 0; });
}

Int CohomologyTable::euler() const
{
    Int chi = 0;
    for (size_t q = 0; q < h.size(); ++q)
        chi = checked_add(chi, q % 2 == 0 ? h[q] : -h[q]);
    return chi;
}

void CohomologyTable::accumulate(Int mult, int q, Int value)
{
    h[q] = checked_add(h[q], checked_mul(mult, value));
}

CohomologyTable cohomology(const Space& space, const BoxProduct& box)
{
    check_arity(space, box);
    CohomologyTable table(space.dim());
    int q = 0;
    Int h = 1;
    for (const FactorSheaf& f : box.factor_list()) {
        FactorCohomology nz = bott_nonzero(f);
        if (nz.q < 0)
            return table;
        q += nz.q;
        h = checked_mul(h, nz.h);
    }
    table.h[q] = h;
    return table;
}

CohomologyTable cohomology(const Space& space, const SplitSheaf& sheaf)
{
    CohomologyTable table(space.dim());
    for (const SplitSheaf::Term& t : sheaf.terms()) {
        CohomologyTable part = cohomology(space, t.box);
        for (int q = 0; q <= table.top(); ++q)
            table.accumulate(t.mult, q, part.h[q]);
    }
    return table;
}

CohomologyTable ext_table(const Space& space, const BoxProduct& a, const SplitSheaf& f)
{
    check_arity(space, a);
    if (!f.all_line_bundles())
        throw std::invalid_argument("ext_table target must be a sum of line bundles");
    BoxProduct dual = a.dual();
    CohomologyTable table(space.dim());
    for (const SplitSheaf::Term& t : f.terms()) {
        CohomologyTable part = cohomology(space, dual.twisted(t.box.degree()));
        for (int q = 0; q <= table.top(); ++q)
            table.accumulate(t.mult, q, part.h[q]);
    }
    return table;
}

Int euler_pairing(const Space& space, const MultiDegree& a, const MultiDegree& b)
{
    if (a.size() != space.factors() || b.size() != space.factors())
        throw std::invalid_argument("multidegree arity mismatch");
    Int chi = 1;
    for (int i = 0; i < space.factors(); ++i) {
        int n = space.dims()[i];
        chi = checked_mul(chi, binom(Int(b[i]) - a[i] + n, n));
    }
    return chi;
}

Int euler_char(const Space& space, const SplitSheaf& sheaf)
{
    return cohomology(space, sheaf).euler();
}

} // namespace blockreg
