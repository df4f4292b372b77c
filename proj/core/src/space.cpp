#include "blockreg/space.hpp"

namespace blockreg {

std::string to_string(const MultiDegree& d)
{
    std::string s = "(";
    for (int i = 0; i < d.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(d[i]);
    }
    return s + ")";
}

Space::Space(std::vector<int> dims) : dims_(std::move(dims))
{
    if (dims_.empty())
        throw std::invalid_argument("a product space needs at least one factor");
    for (int n : dims_) {
        if (n < 1)
            throw std::invalid_argument("every factor dimension must be at least 1");
        dim_ += n;
    }
}

Int Space::k0_rank() const
{
    Int r = 1;
    for (int n : dims_)
        r = checked_mul(r, n + 1);
    return r;
}

MultiDegree Space::canonical() const
{
    MultiDegree d;
    d.a.reserve(dims_.size());
    for (int n : dims_)
        d.a.push_back(-n - 1);
    return d;
}

MultiDegree Space::period_twist() const
{
    MultiDegree d;
    d.a.reserve(dims_.size());
    for (int n : dims_)
        d.a.push_back(n + 1);
    return d;
}

std::string Space::name() const
{
    std::string s;
    for (size_t i = 0; i < dims_.size(); ++i) {
        if (i)
            s += "x";
        s += "P" + std::to_string(dims_[i]);
    }
    return s;
}

} // namespace blockreg
