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

#include "ldpcq/kernels.hpp"

#include <bit>
#include <cmath>

namespace ldpcq::kern {

namespace {

void s_xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

uint64_t s_popcount_words(const uint64_t* a, std::size_t n) {
  uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

uint64_t s_popcount_and(const uint64_t* a, const uint64_t* b, std::size_t n) {
  uint64_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i] & b[i]);
  return c;
}

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

void s_h_pairs(cdouble* a, cdouble* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const cdouble lo = a[i];
    const cdouble hi = b[i];
    a[i] = (lo + hi) * kInvSqrt2;
    b[i] = (lo - hi) * kInvSqrt2;
  }
}

void s_swap_blocks(cdouble* a, cdouble* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const cdouble t = a[i];
    a[i] = b[i];
    b[i] = t;
  }
}

void s_negate(cdouble* a, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] = -a[i];
}

void s_scale(cdouble* a, std::size_t n, double s) {
  for (std::size_t i = 0; i < n; ++i) a[i] *= s;
}

double s_norm_sq(const cdouble* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += std::norm(a[i]);
  return acc;
}

}  // namespace

namespace detail {
const KernelTable scalar_table = {
    s_xor_words, s_popcount_words, s_popcount_and, s_h_pairs,
    s_swap_blocks, s_negate, s_scale, s_norm_sq,
};
}  // namespace detail

namespace {

const detail::KernelTable* pick(Backend b) {
#if defined(__x86_64__) && defined(LDPCQ_HAVE_AVX2_TU)
  if ((b == Backend::Avx2 || b == Backend::Auto) && avx2_supported())
    return &detail::avx2_table;
#endif
  (void)b;
  return &detail::scalar_table;
}

const detail::KernelTable* g_table = pick(Backend::Auto);
Backend g_backend = (g_table == &detail::scalar_table) ? Backend::Scalar : Backend::Avx2;

}  // namespace

bool avx2_supported() {
#if defined(__x86_64__) && defined(LDPCQ_HAVE_AVX2_TU)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return g_backend; }

Backend set_backend(Backend b) {
  g_table = pick(b);
  g_backend = (g_table == &detail::scalar_table) ? Backend::Scalar : Backend::Avx2;
  return g_backend;
}

void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n) { g_table->xor_words(dst, src, n); }
uint64_t popcount_words(const uint64_t* a, std::size_t n) { return g_table->popcount_words(a, n); }
uint64_t popcount_and(const uint64_t* a, const uint64_t* b, std::size_t n) { return g_table->popcount_and(a, b, n); }
void h_pairs(cdouble* a, cdouble* b, std::size_t n) { g_table->h_pairs(a, b, n); }
void swap_blocks(cdouble* a, cdouble* b, std::size_t n) { g_table->swap_blocks(a, b, n); }
void negate(cdouble* a, std::size_t n) { g_table->negate(a, n); }
void scale(cdouble* a, std::size_t n, double s) { g_table->scale(a, n, s); }
double norm_sq(const cdouble* a, std::size_t n) { return g_table->norm_sq(a, n); }

}  // namespace ldpcq::kern
