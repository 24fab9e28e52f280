#pragma once

#include "octica/data_file.hpp"

#include <random>

namespace testing {

inline const octica::DataFile& data()
{
    static const octica::DataFile pd = octica::DataFile::load(octica::DataFile::default_path());
    return pd;
}

inline octica::GaussInt random_gauss(std::mt19937_64& rng, long bound = 5)
{
    std::uniform_int_distribution<long> d(-bound, bound);
    return octica::GaussInt(d(rng), d(rng));
}

inline octica::GVec random_gvec(std::mt19937_64& rng, std::size_t n, long bound = 5)
{
    octica::GVec v(n);
    for (auto& x : v) x = random_gauss(rng, bound);
    return v;
}

}  // namespace testing
