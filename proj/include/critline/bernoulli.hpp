#pragma once

#include <cstdint>

namespace critline {

// B_{2k} for k = 1..15 as exact rationals, so any scalar type can build
// them at its own precision.
struct bernoulli_ratio {
  std::int64_t num;
  std::int64_t den;
};

inline constexpr bernoulli_ratio kBernoulli2k[] = {
    {1, 6},           {-1, 30},           {1, 42},
    {-1, 30},         {5, 66},            {-691, 2730},
    {7, 6},           {-3617, 510},       {43867, 798},
    {-174611, 330},   {854513, 138},      {-236364091, 2730},
    {8553103, 6},     {-23749461029, 870},{8615841276005, 14322},
};

template <typename T>
T bernoulli_2k(int k) {  // k = 1 -> B_2
  return T(static_cast<long>(kBernoulli2k[k - 1].num)) /
         T(static_cast<long>(kBernoulli2k[k - 1].den));
}

}  // namespace critline
