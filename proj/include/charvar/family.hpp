#pragma once

#include <string>

namespace charvar {

// Presentation families for the source group.
struct GroupFamily {
    enum Kind { Free, Orientable, NonOrientable, TorusKnot };
    Kind kind = Free;
    int r = 1;  // Free
    int g = 1;  // Orientable
    int k = 2;  // NonOrientable
    int a = 2, b = 3;  // TorusKnot

    static GroupFamily free(int r);
    static GroupFamily orientable(int g);
    static GroupFamily nonorientable(int k);
    static GroupFamily torusknot(int a, int b);

    // Throws BadParams on non-positive parameters or gcd(a,b) != 1.
    void validate() const;
    // number of generators in the presentation
    int generators() const;
};

std::string to_string(const GroupFamily& f);
// "free", "orientable", ...
std::string kind_name(GroupFamily::Kind k);

} // namespace charvar
