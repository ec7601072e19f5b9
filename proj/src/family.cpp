#include "charvar/family.hpp"

#include "charvar/error.hpp"

#include <numeric>

namespace charvar {

GroupFamily GroupFamily::free(int r)
{
    GroupFamily f;
    f.kind = Free;
    f.r = r;
    f.validate();
    return f;
}

GroupFamily GroupFamily::orientable(int g)
{
    GroupFamily f;
    f.kind = Orientable;
    f.g = g;
    f.validate();
    return f;
}

GroupFamily GroupFamily::nonorientable(int k)
{
    GroupFamily f;
    f.kind = NonOrientable;
    f.k = k;
    f.validate();
    return f;
}

GroupFamily GroupFamily::torusknot(int a, int b)
{
    GroupFamily f;
    f.kind = TorusKnot;
    f.a = a;
    f.b = b;
    f.validate();
    return f;
}

void GroupFamily::validate() const
{
    switch (kind) {
    case Free:
        if (r < 1)
            throw Error(ErrorKind::BadParams, "free group needs r >= 1");
        break;
    case Orientable:
        if (g < 1)
            throw Error(ErrorKind::BadGenus, "orientable surface needs g >= 1");
        break;
    case NonOrientable:
        if (k < 1)
            throw Error(ErrorKind::BadParams, "non-orientable surface needs k >= 1");
        break;
    case TorusKnot:
        if (a < 1 || b < 1 || std::gcd(a, b) != 1)
            throw Error(ErrorKind::BadParams, "torus knot needs coprime a, b >= 1");
        break;
    }
}

int GroupFamily::generators() const
{
    switch (kind) {
    case Free: return r;
    case Orientable: return 2 * g;
    case NonOrientable: return k;
    case TorusKnot: return 2;
    }
    return 0;
}

std::string kind_name(GroupFamily::Kind k)
{
    switch (k) {
    case GroupFamily::Free: return "free";
    case GroupFamily::Orientable: return "orientable";
    case GroupFamily::NonOrientable: return "nonorientable";
    case GroupFamily::TorusKnot: return "torusknot";
    }
    return "";
}

std::string to_string(const GroupFamily& f)
{
    switch (f.kind) {
    case GroupFamily::Free: return "Free(" + std::to_string(f.r) + ")";
    case GroupFamily::Orientable: return "Orientable(" + std::to_string(f.g) + ")";
    case GroupFamily::NonOrientable: return "NonOrientable(" + std::to_string(f.k) + ")";
    case GroupFamily::TorusKnot:
        return "TorusKnot(" + std::to_string(f.a) + "," + std::to_string(f.b) + ")";
    }
    return "";
}

} // namespace charvar
