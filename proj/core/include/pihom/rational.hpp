#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace pihom {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator) through all arithmetic; nothing here ever rounds.
using Rat = mpq_class;

// Dense vector of rationals; chain/coordinate spaces are small enough that
// vectors stay dense even where matrices are sparse.
using QVec = std::vector<Rat>;

struct input_error : std::runtime_error {
    explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline Rat rat(long num, long den = 1)
{
    if (den == 0)
        throw input_error("rational with zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "num/den" or "-num/den".
inline Rat rat_parse(const std::string& s)
{
    Rat r;
    if (r.set_str(s, 10) != 0)
        throw input_error("bad rational literal: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

inline bool is_zero_vec(const QVec& v)
{
    for (const Rat& x : v)
        if (x != 0)
            return false;
    return true;
}

inline QVec zero_vec(std::size_t n) { return QVec(n, Rat(0)); }

}  // namespace pihom
