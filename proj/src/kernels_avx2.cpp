// Copyright 2026 The ldpcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// AVX2 kernel variants. This TU is compiled with -mavx2 and only ever entered
// after a cpuid check. Complex arithmetic keeps the per-element operation
// order of the scalar kernels so results are bit-identical.

#include "ldpcq/kernels.hpp"

#ifdef __x86_64__

#include <immintrin.h>

#include <bit>
#include <cmath>

namespace ldpcq::kern {
namespace {

void a_xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

uint64_t a_popcount_words(const uint64_t* a, std::size_t n) {
  // AVX2 has no 64-bit popcount; four scalar popcnts per iteration keeps the
  // port busy and beats the lookup approaches at these sizes.
  uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += std::popcount(a[i]);
    c1 += std::popcount(a[i + 1]);
    c2 += std::popcount(a[i + 2]);
    c3 += std::popcount(a[i + 3]);
  }
  uint64_t c = c0 + c1 + c2 + c3;
  for (; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

uint64_t a_popcount_and(const uint64_t* a, const uint64_t* b, std::size_t n) {
  uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c0 += std::popcount(a[i] & b[i]);
    c1 += std::popcount(a[i + 1] & b[i + 1]);
    c2 += std::popcount(a[i + 2] & b[i + 2]);
    c3 += std::popcount(a[i + 3] & b[i + 3]);
  }
  uint64_t c = c0 + c1 + c2 + c3;
  for (; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

void a_h_pairs(cdouble* a, cdouble* b, std::size_t n) {
  const __m256d f = _mm256_set1_pd(kInvSqrt2);
  double* pa = reinterpret_cast<double*>(a);
  double* pb = reinterpret_cast<double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d lo = _mm256_loadu_pd(pa + 2 * i);
    __m256d hi = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(pa + 2 * i, _mm256_mul_pd(_mm256_add_pd(lo, hi), f));
    _mm256_storeu_pd(pb + 2 * i, _mm256_mul_pd(_mm256_sub_pd(lo, hi), f));
  }
  for (; i < n; ++i) {
    const cdouble lo = a[i];
    const cdouble hi = b[i];
    a[i] = (lo + hi) * kInvSqrt2;
    b[i] = (lo - hi) * kInvSqrt2;
  }
}

void a_swap_blocks(cdouble* a, cdouble* b, std::size_t n) {
  double* pa = reinterpret_cast<double*>(a);
  double* pb = reinterpret_cast<double*>(b);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d va = _mm256_loadu_pd(pa + 2 * i);
    __m256d vb = _mm256_loadu_pd(pb + 2 * i);
    _mm256_storeu_pd(pa + 2 * i, vb);
    _mm256_storeu_pd(pb + 2 * i, va);
  }
  for (; i < n; ++i) {
    const cdouble t = a[i];
    a[i] = b[i];
    b[i] = t;
  }
}

void a_negate(cdouble* a, std::size_t n) {
  const __m256d zero = _mm256_setzero_pd();
  double* pa = reinterpret_cast<double*>(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(pa + 2 * i);
    _mm256_storeu_pd(pa + 2 * i, _mm256_sub_pd(zero, v));
  }
  for (; i < n; ++i) a[i] = -a[i];
}

void a_scale(cdouble* a, std::size_t n, double s) {
  const __m256d f = _mm256_set1_pd(s);
  double* pa = reinterpret_cast<double*>(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(pa + 2 * i);
    _mm256_storeu_pd(pa + 2 * i, _mm256_mul_pd(v, f));
  }
  for (; i < n; ++i) a[i] *= s;
}

double a_norm_sq(const cdouble* a, std::size_t n) {
  // Reduction order differs from the scalar kernel; callers treat norms as
  // approximate (tolerance-compared) values.
  __m256d acc = _mm256_setzero_pd();
  const double* pa = reinterpret_cast<const double*>(a);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d v = _mm256_loadu_pd(pa + 2 * i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double r = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) r += std::norm(a[i]);
  return r;
}

}  // namespace

namespace detail {
const KernelTable avx2_table = {
    a_xor_words, a_popcount_words, a_popcount_and, a_h_pairs,
    a_swap_blocks, a_negate, a_scale, a_norm_sq,
};
}  // namespace detail

}  // namespace ldpcq::kern

#endif  // __x86_64__
