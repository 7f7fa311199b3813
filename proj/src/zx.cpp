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

#include "ldpcq/zx.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ldpcq/errors.hpp"

namespace ldpcq {

using cdouble = std::complex<double>;

uint32_t ZxDiagram::add_spider(SpiderColor color) {
  colors_.push_back(color);
  return static_cast<uint32_t>(colors_.size() - 1);
}

void ZxDiagram::add_edge(uint32_t a, uint32_t b, bool hadamard) {
  if (a >= colors_.size() || b >= colors_.size())
    throw std::invalid_argument("ZxDiagram::add_edge: unknown spider");
  if (a == b) throw std::invalid_argument("ZxDiagram::add_edge: self edges not supported");
  edges_.push_back({a, b, hadamard});
}

void ZxDiagram::add_input(uint32_t spider, bool hadamard) {
  if (spider >= colors_.size()) throw std::invalid_argument("ZxDiagram::add_input: unknown spider");
  inputs_.push_back({spider, hadamard});
}

void ZxDiagram::add_output(uint32_t spider, bool hadamard) {
  if (spider >= colors_.size()) throw std::invalid_argument("ZxDiagram::add_output: unknown spider");
  outputs_.push_back({spider, hadamard});
}

std::size_t ZxDiagram::degree(uint32_t s) const {
  std::size_t d = 0;
  for (const Edge& e : edges_) d += (e.a == s) + (e.b == s);
  for (const Leg& l : inputs_) d += (l.spider == s);
  for (const Leg& l : outputs_) d += (l.spider == s);
  return d;
}

std::string ZxDiagram::debug_dump() const {
  std::ostringstream os;
  for (uint32_t s = 0; s < colors_.size(); ++s) {
    os << s << ' ' << (colors_[s] == SpiderColor::Z ? 'Z' : 'X') << " |";
    for (const Edge& e : edges_) {
      if (e.a == s) os << ' ' << e.b << (e.hadamard ? "h" : "");
      if (e.b == s) os << ' ' << e.a << (e.hadamard ? "h" : "");
    }
    os << " |";
    for (std::size_t i = 0; i < inputs_.size(); ++i)
      if (inputs_[i].spider == s) os << " in" << i << (inputs_[i].hadamard ? "h" : "");
    for (std::size_t i = 0; i < outputs_.size(); ++i)
      if (outputs_[i].spider == s) os << " out" << i << (outputs_[i].hadamard ? "h" : "");
    os << '\n';
  }
  return os.str();
}

namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244008443621048490;

struct Tensor {
  std::vector<uint32_t> axes;  // axes[k] is bit k of the linear index
  std::vector<cdouble> data;   // size 2^axes.size()
};

void check_budget(std::size_t rank_bits, const ContractOptions& opts) {
  if (rank_bits >= 63 || (std::size_t{1} << rank_bits) > opts.max_tensor_entries)
    throw resource_error("zx contraction: tensor budget exceeded");
}

// In-place Hadamard along one axis.
void apply_h_along_axis(Tensor& t, std::size_t axis_pos) {
  const std::size_t stride = std::size_t{1} << axis_pos;
  const std::size_t total = t.data.size();
  for (std::size_t base = 0; base < total; base += 2 * stride) {
    for (std::size_t k = 0; k < stride; ++k) {
      cdouble& lo = t.data[base + k];
      cdouble& hi = t.data[base + k + stride];
      const cdouble a = lo, b = hi;
      lo = (a + b) * kInvSqrt2;
      hi = (a - b) * kInvSqrt2;
    }
  }
}

std::size_t expand_bits(std::size_t value, const std::vector<std::size_t>& positions) {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < positions.size(); ++k)
    idx |= ((value >> k) & 1) << positions[k];
  return idx;
}

Tensor contract_pair(const Tensor& a, const Tensor& b, const ContractOptions& opts) {
  std::vector<uint32_t> shared;
  for (uint32_t ax : a.axes)
    if (std::find(b.axes.begin(), b.axes.end(), ax) != b.axes.end()) shared.push_back(ax);

  auto free_positions = [&](const Tensor& t, std::vector<std::size_t>& fpos,
                            std::vector<std::size_t>& spos, std::vector<uint32_t>& faxes) {
    for (std::size_t p = 0; p < t.axes.size(); ++p) {
      if (std::find(shared.begin(), shared.end(), t.axes[p]) != shared.end()) {
        // shared positions ordered by the canonical `shared` list
      } else {
        fpos.push_back(p);
        faxes.push_back(t.axes[p]);
      }
    }
    spos.resize(shared.size());
    for (std::size_t k = 0; k < shared.size(); ++k)
      spos[k] = static_cast<std::size_t>(
          std::find(t.axes.begin(), t.axes.end(), shared[k]) - t.axes.begin());
  };

  std::vector<std::size_t> afree, ashared, bfree, bshared;
  std::vector<uint32_t> a_free_axes, b_free_axes;
  free_positions(a, afree, ashared, a_free_axes);
  free_positions(b, bfree, bshared, b_free_axes);

  const std::size_t ra = afree.size(), rb = bfree.size(), s = shared.size();
  check_budget(ra + rb, opts);

  Tensor out;
  out.axes = a_free_axes;
  out.axes.insert(out.axes.end(), b_free_axes.begin(), b_free_axes.end());
  out.data.assign(std::size_t{1} << (ra + rb), cdouble{0.0, 0.0});

  for (std::size_t ib = 0; ib < (std::size_t{1} << rb); ++ib) {
    const std::size_t b_base = expand_bits(ib, bfree);
    for (std::size_t ia = 0; ia < (std::size_t{1} << ra); ++ia) {
      const std::size_t a_base = expand_bits(ia, afree);
      cdouble acc{0.0, 0.0};
      for (std::size_t is = 0; is < (std::size_t{1} << s); ++is)
        acc += a.data[a_base | expand_bits(is, ashared)] *
               b.data[b_base | expand_bits(is, bshared)];
      out.data[(ib << ra) | ia] = acc;
    }
  }
  return out;
}

}  // namespace

Eigen::MatrixXcd contract(const ZxDiagram& d, const ContractOptions& opts) {
  const std::size_t n_in = d.inputs().size();
  const std::size_t n_out = d.outputs().size();
  if (n_in + n_out > opts.max_boundary_legs)
    throw resource_error("zx contraction: too many boundary legs");

  // Axis ids: edges first, then input legs, then output legs.
  const std::size_t n_edges = d.edges().size();
  auto input_axis = [&](std::size_t i) { return static_cast<uint32_t>(n_edges + i); };
  auto output_axis = [&](std::size_t i) { return static_cast<uint32_t>(n_edges + n_in + i); };

  // Incident axes per spider, with the Hadamard flags to fold in.
  struct Incidence {
    uint32_t axis;
    bool hadamard;
  };
  std::vector<std::vector<Incidence>> inc(d.spider_count());
  for (std::size_t e = 0; e < n_edges; ++e) {
    const auto& ed = d.edges()[e];
    // A Hadamard edge is folded into the endpoint `a` side.
    inc[ed.a].push_back({static_cast<uint32_t>(e), ed.hadamard});
    inc[ed.b].push_back({static_cast<uint32_t>(e), false});
  }
  for (std::size_t i = 0; i < n_in; ++i)
    inc[d.inputs()[i].spider].push_back({input_axis(i), d.inputs()[i].hadamard});
  for (std::size_t i = 0; i < n_out; ++i)
    inc[d.outputs()[i].spider].push_back({output_axis(i), d.outputs()[i].hadamard});

  // Build spider tensors. The X spider equals the Z spider conjugated by
  // Hadamards on every leg, which closes to 2^{1-d/2} on even-parity entries.
  std::vector<Tensor> tensors;
  for (uint32_t s = 0; s < d.spider_count(); ++s) {
    const std::size_t deg = inc[s].size();
    check_budget(deg, opts);
    Tensor t;
    for (const Incidence& ic : inc[s]) t.axes.push_back(ic.axis);
    t.data.assign(std::size_t{1} << deg, cdouble{0.0, 0.0});
    if (d.color(s) == SpiderColor::Z) {
      t.data[0] = 1.0;
      t.data[(std::size_t{1} << deg) - 1] += 1.0;  // deg 0: scalar 2
    } else {
      const double v = std::pow(2.0, 1.0 - 0.5 * static_cast<double>(deg));
      for (std::size_t idx = 0; idx < t.data.size(); ++idx)
        if ((std::popcount(idx) & 1) == 0) t.data[idx] = v;
    }
    for (std::size_t p = 0; p < inc[s].size(); ++p)
      if (inc[s][p].hadamard) apply_h_along_axis(t, p);
    tensors.push_back(std::move(t));
  }

  // Contract internal edges, visiting spiders in ascending initial degree.
  std::vector<std::size_t> owner(d.spider_count());
  std::iota(owner.begin(), owner.end(), std::size_t{0});
  std::vector<bool> live(tensors.size(), true);
  auto find_owner = [&](std::size_t s) {
    while (owner[s] != s) s = owner[s] = owner[owner[s]];
    return s;
  };

  std::vector<uint32_t> order(d.spider_count());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(),
                   [&](uint32_t x, uint32_t y) { return d.degree(x) < d.degree(y); });

  for (uint32_t s : order) {
    for (;;) {
      const std::size_t ts = find_owner(s);
      // First edge axis of ts that lives in another tensor.
      std::size_t partner = SIZE_MAX;
      for (uint32_t ax : tensors[ts].axes) {
        if (ax >= n_edges) continue;
        const auto& ed = d.edges()[ax];
        const std::size_t ta = find_owner(ed.a), tb = find_owner(ed.b);
        const std::size_t other = (ta == ts) ? tb : ta;
        if (other != ts) {
          partner = other;
          break;
        }
      }
      if (partner == SIZE_MAX) break;
      Tensor merged = contract_pair(tensors[ts], tensors[partner], opts);
      tensors[ts] = std::move(merged);
      live[partner] = false;
      owner[partner] = ts;
    }
  }

  // Outer product of what is left (disconnected components and scalars).
  Tensor total;
  total.data.assign(1, cdouble{1.0, 0.0});
  for (std::size_t t = 0; t < tensors.size(); ++t) {
    if (!live[t]) continue;
    total = contract_pair(total, tensors[t], opts);
  }

  // Assemble the boundary matrix: output leg j is row bit j, input leg j is
  // column bit j.
  std::vector<std::size_t> in_pos(n_in), out_pos(n_out);
  auto axis_pos = [&](uint32_t ax) {
    const auto it = std::find(total.axes.begin(), total.axes.end(), ax);
    if (it == total.axes.end()) throw std::logic_error("zx contraction: missing boundary axis");
    return static_cast<std::size_t>(it - total.axes.begin());
  };
  for (std::size_t i = 0; i < n_in; ++i) in_pos[i] = axis_pos(input_axis(i));
  for (std::size_t i = 0; i < n_out; ++i) out_pos[i] = axis_pos(output_axis(i));

  Eigen::MatrixXcd mat(std::size_t{1} << n_out, std::size_t{1} << n_in);
  for (std::size_t r = 0; r < (std::size_t{1} << n_out); ++r) {
    const std::size_t rbase = expand_bits(r, out_pos);
    for (std::size_t c = 0; c < (std::size_t{1} << n_in); ++c)
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          total.data[rbase | expand_bits(c, in_pos)];
  }
  return mat;
}

ZxDiagram kw_diagram(const ClassicalCode& c) {
  ZxDiagram d;
  for (std::size_t i = 0; i < c.n(); ++i) d.add_spider(SpiderColor::Z);
  for (std::size_t a = 0; a < c.m(); ++a) d.add_spider(SpiderColor::X);
  for (std::size_t a = 0; a < c.m(); ++a)
    for (uint32_t i : c.check_support(a))
      d.add_edge(i, static_cast<uint32_t>(c.n() + a));
  for (std::size_t i = 0; i < c.n(); ++i) d.add_input(static_cast<uint32_t>(i));
  for (std::size_t a = 0; a < c.m(); ++a)
    d.add_output(static_cast<uint32_t>(c.n() + a), /*hadamard=*/true);
  return d;
}

ZxDiagram product_diagram(const ClassicalCode& c1, const ClassicalCode& c2, ProductKind kind) {
  const std::size_t pairs = c1.n() * c2.n();
  const SpiderColor color = (kind == ProductKind::Tensor) ? SpiderColor::Z : SpiderColor::X;
  ZxDiagram d;
  for (std::size_t p = 0; p < pairs; ++p) d.add_spider(color);
  for (std::size_t p = 0; p < pairs; ++p) d.add_input(static_cast<uint32_t>(p));  // alpha layer
  for (std::size_t p = 0; p < pairs; ++p) d.add_input(static_cast<uint32_t>(p));  // beta layer
  for (std::size_t p = 0; p < pairs; ++p) d.add_output(static_cast<uint32_t>(p));
  return d;
}

Eigen::MatrixXcd kw_matrix_oracle(const BinaryMatrix& h, std::size_t max_qubits) {
  const std::size_t n = h.cols(), m = h.rows();
  if (n + m > max_qubits) throw resource_error("kw_matrix_oracle: size cap exceeded");

  // Row masks fit in single words because n <= max_qubits <= 63.
  std::vector<uint64_t> row_mask(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (uint32_t i : h.row_support(a)) row_mask[a] |= uint64_t{1} << i;

  const double scale = std::pow(2.0, -0.5 * static_cast<double>(m));
  Eigen::MatrixXcd d(std::size_t{1} << m, std::size_t{1} << n);
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    uint64_t hx = 0;
    for (std::size_t a = 0; a < m; ++a)
      hx |= static_cast<uint64_t>(std::popcount(row_mask[a] & x) & 1) << a;
    for (uint64_t y = 0; y < (uint64_t{1} << m); ++y) {
      const bool odd = std::popcount(y & hx) & 1;
      d(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) = odd ? -scale : scale;
    }
  }
  return d;
}

ZxDiagram fuse_spiders(const ZxDiagram& d, uint32_t a, uint32_t b) {
  if (a == b || a >= d.spider_count() || b >= d.spider_count())
    throw std::invalid_argument("fuse_spiders: bad spider ids");
  if (d.color(a) != d.color(b)) throw std::invalid_argument("fuse_spiders: colors differ");
  bool connected_plain = false;
  for (const auto& e : d.edges()) {
    const bool between = (e.a == a && e.b == b) || (e.a == b && e.b == a);
    if (between && e.hadamard)
      throw std::invalid_argument("fuse_spiders: Hadamard edge between spiders");
    connected_plain |= between;
  }
  if (!connected_plain) throw std::invalid_argument("fuse_spiders: spiders not plainly connected");

  ZxDiagram out;
  std::vector<uint32_t> remap(d.spider_count());
  uint32_t next = 0;
  for (uint32_t s = 0; s < d.spider_count(); ++s) {
    if (s == b) continue;
    remap[s] = next++;
    out.add_spider(d.color(s));
  }
  remap[b] = remap[a];
  for (const auto& e : d.edges()) {
    const bool between = (e.a == a && e.b == b) || (e.a == b && e.b == a);
    if (between) continue;
    out.add_edge(remap[e.a], remap[e.b], e.hadamard);
  }
  for (const auto& l : d.inputs()) out.add_input(remap[l.spider], l.hadamard);
  for (const auto& l : d.outputs()) out.add_output(remap[l.spider], l.hadamard);
  return out;
}

}  // namespace ldpcq
