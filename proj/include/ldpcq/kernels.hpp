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

#ifndef LDPCQ_KERNELS_HPP
#define LDPCQ_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <cstdint>

namespace ldpcq::kern {

using cdouble = std::complex<double>;

// Data-parallel inner loops shared by the GF(2) matrix code, the Pauli
// bit-vector algebra and the dense state-vector simulator. Each kernel has a
// scalar reference implementation and (on x86-64) an AVX2 variant; the active
// backend is picked once at startup via cpuid and can be forced for
// equivalence testing.

enum class Backend { Auto, Scalar, Avx2 };

// Returns the backend actually in use.
Backend active_backend();
// Forces a backend (Scalar always works; Avx2 only if supported, otherwise
// falls back to Scalar and returns the fallback). Intended for tests.
Backend set_backend(Backend b);
bool avx2_supported();

// dst[i] ^= src[i]
void xor_words(uint64_t* dst, const uint64_t* src, std::size_t n);
// popcount over all words
uint64_t popcount_words(const uint64_t* a, std::size_t n);
// popcount of a & b
uint64_t popcount_and(const uint64_t* a, const uint64_t* b, std::size_t n);

// (a[i], b[i]) <- ((a[i]+b[i]), (a[i]-b[i])) * (1/sqrt(2))
void h_pairs(cdouble* a, cdouble* b, std::size_t n);
// swap a[i] <-> b[i]
void swap_blocks(cdouble* a, cdouble* b, std::size_t n);
// a[i] <- -a[i]
void negate(cdouble* a, std::size_t n);
// a[i] <- s * a[i]
void scale(cdouble* a, std::size_t n, double s);
// sum |a[i]|^2
double norm_sq(const cdouble* a, std::size_t n);

namespace detail {
struct KernelTable {
  void (*xor_words)(uint64_t*, const uint64_t*, std::size_t);
  uint64_t (*popcount_words)(const uint64_t*, std::size_t);
  uint64_t (*popcount_and)(const uint64_t*, const uint64_t*, std::size_t);
  void (*h_pairs)(cdouble*, cdouble*, std::size_t);
  void (*swap_blocks)(cdouble*, cdouble*, std::size_t);
  void (*negate)(cdouble*, std::size_t);
  void (*scale)(cdouble*, std::size_t, double);
  double (*norm_sq)(const cdouble*, std::size_t);
};
extern const KernelTable scalar_table;
#ifdef __x86_64__
extern const KernelTable avx2_table;
#endif
}  // namespace detail

}  // namespace ldpcq::kern

#endif
