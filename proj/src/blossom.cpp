// Copyright 2026 The Offload Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "offload/blossom.hpp"

#include <algorithm>
#include <cassert>

namespace offload {

namespace {

// Vertices are 0..n-1, non-trivial blossoms n..2n-1. Edge k has endpoints
// 2k and 2k+1; endpoint p belongs to vertex endpoint_[p] and p^1 is the
// opposite end.
class BlossomMatcher {
 public:
  BlossomMatcher(std::size_t n, const std::vector<WeightedEdge>& edges)
      : n_(static_cast<long>(n)), edges_(edges) {}

  std::vector<long> run();

 private:
  std::int64_t slack(long k) const {
    const auto& e = edges_[static_cast<std::size_t>(k)];
    return dual_[e.u] + dual_[e.v] - 2 * e.weight;
  }

  void leaves(long b, std::vector<long>& out) const {
    if (b < n_) {
      out.push_back(b);
      return;
    }
    for (long t : childs_[b]) leaves(t, out);
  }
  std::vector<long> leaves(long b) const {
    std::vector<long> out;
    leaves(b, out);
    return out;
  }

  void assign_label(long w, int t, long p);
  long scan_blossom(long v, long w);
  void add_blossom(long base, long k);
  void expand_blossom(long b, bool endstage);
  void augment_blossom(long b, long v);
  void augment_matching(long k);

  long n_;
  const std::vector<WeightedEdge>& edges_;
  std::vector<long> endpoint_;
  std::vector<std::vector<long>> neighbend_;
  std::vector<long> mate_;
  std::vector<int> label_;
  std::vector<long> labelend_;
  std::vector<long> inblossom_;
  std::vector<long> parent_;
  std::vector<std::vector<long>> childs_;
  std::vector<long> base_;
  std::vector<std::vector<long>> endps_;
  std::vector<long> bestedge_;
  std::vector<std::vector<long>> blossombestedges_;
  std::vector<bool> has_bestedges_;
  std::vector<long> unused_;
  std::vector<std::int64_t> dual_;
  std::vector<bool> allowedge_;
  std::vector<long> queue_;
};

void BlossomMatcher::assign_label(long w, int t, long p) {
  const long b = inblossom_[w];
  assert(label_[w] == 0 && label_[b] == 0);
  label_[w] = label_[b] = t;
  labelend_[w] = labelend_[b] = p;
  bestedge_[w] = bestedge_[b] = -1;
  if (t == 1) {
    leaves(b, queue_);
  } else if (t == 2) {
    const long base = base_[b];
    assert(mate_[base] >= 0);
    assign_label(endpoint_[mate_[base]], 1, mate_[base] ^ 1);
  }
}

long BlossomMatcher::scan_blossom(long v, long w) {
  std::vector<long> path;
  long base = -1;
  while (v != -1 || w != -1) {
    long b = inblossom_[v];
    if (label_[b] & 4) {
      base = base_[b];
      break;
    }
    assert(label_[b] == 1);
    path.push_back(b);
    label_[b] = 5;
    if (labelend_[b] == -1) {
      v = -1;
    } else {
      v = endpoint_[labelend_[b]];
      b = inblossom_[v];
      assert(label_[b] == 2);
      v = endpoint_[labelend_[b]];
    }
    if (w != -1) std::swap(v, w);
  }
  for (long b : path) label_[b] = 1;
  return base;
}

void BlossomMatcher::add_blossom(long base, long k) {
  const auto& e = edges_[static_cast<std::size_t>(k)];
  long v = static_cast<long>(e.u);
  long w = static_cast<long>(e.v);
  const long bb = inblossom_[base];
  long bv = inblossom_[v];
  long bw = inblossom_[w];
  const long b = unused_.back();
  unused_.pop_back();
  base_[b] = base;
  parent_[b] = -1;
  parent_[bb] = b;
  auto& path = childs_[b];
  auto& endps = endps_[b];
  path.clear();
  endps.clear();
  while (bv != bb) {
    parent_[bv] = b;
    path.push_back(bv);
    endps.push_back(labelend_[bv]);
    v = endpoint_[labelend_[bv]];
    bv = inblossom_[v];
  }
  path.push_back(bb);
  std::reverse(path.begin(), path.end());
  std::reverse(endps.begin(), endps.end());
  endps.push_back(2 * k);
  while (bw != bb) {
    parent_[bw] = b;
    path.push_back(bw);
    endps.push_back(labelend_[bw] ^ 1);
    w = endpoint_[labelend_[bw]];
    bw = inblossom_[w];
  }
  assert(label_[bb] == 1);
  label_[b] = 1;
  labelend_[b] = labelend_[bb];
  dual_[b] = 0;
  for (long leaf : leaves(b)) {
    if (label_[inblossom_[leaf]] == 2) queue_.push_back(leaf);
    inblossom_[leaf] = b;
  }

  std::vector<long> bestedgeto(2 * n_, -1);
  for (long sub : path) {
    std::vector<std::vector<long>> nblists;
    if (!has_bestedges_[sub]) {
      for (long leaf : leaves(sub)) {
        std::vector<long> ks;
        for (long p : neighbend_[leaf]) ks.push_back(p / 2);
        nblists.push_back(std::move(ks));
      }
    } else {
      nblists.push_back(blossombestedges_[sub]);
    }
    for (const auto& nblist : nblists) {
      for (long kk : nblist) {
        const auto& ed = edges_[static_cast<std::size_t>(kk)];
        long i = static_cast<long>(ed.u);
        long j = static_cast<long>(ed.v);
        if (inblossom_[j] == b) std::swap(i, j);
        const long bj = inblossom_[j];
        if (bj != b && label_[bj] == 1 &&
            (bestedgeto[bj] == -1 || slack(kk) < slack(bestedgeto[bj]))) {
          bestedgeto[bj] = kk;
        }
      }
    }
    blossombestedges_[sub].clear();
    has_bestedges_[sub] = false;
    bestedge_[sub] = -1;
  }
  blossombestedges_[b].clear();
  for (long kk : bestedgeto) {
    if (kk != -1) blossombestedges_[b].push_back(kk);
  }
  has_bestedges_[b] = true;
  bestedge_[b] = -1;
  for (long kk : blossombestedges_[b]) {
    if (bestedge_[b] == -1 || slack(kk) < slack(bestedge_[b])) bestedge_[b] = kk;
  }
}

void BlossomMatcher::expand_blossom(long b, bool endstage) {
  for (long s : childs_[b]) {
    parent_[s] = -1;
    if (s < n_) {
      inblossom_[s] = s;
    } else if (endstage && dual_[s] == 0) {
      expand_blossom(s, endstage);
    } else {
      for (long leaf : leaves(s)) inblossom_[leaf] = s;
    }
  }
  if (!endstage && label_[b] == 2) {
    const auto& childs = childs_[b];
    const auto len = static_cast<long>(childs.size());
    const long entrychild = inblossom_[endpoint_[labelend_[b] ^ 1]];
    long j = std::find(childs.begin(), childs.end(), entrychild) - childs.begin();
    long jstep;
    long endptrick;
    if (j & 1) {
      j -= len;
      jstep = 1;
      endptrick = 0;
    } else {
      jstep = -1;
      endptrick = 1;
    }
    auto at = [len](const std::vector<long>& v, long idx) {
      return v[static_cast<std::size_t>(((idx % len) + len) % len)];
    };
    long p = labelend_[b];
    while (j != 0) {
      label_[endpoint_[p ^ 1]] = 0;
      label_[endpoint_[at(endps_[b], j - endptrick) ^ endptrick ^ 1]] = 0;
      assign_label(endpoint_[p ^ 1], 2, p);
      allowedge_[at(endps_[b], j - endptrick) / 2] = true;
      j += jstep;
      p = at(endps_[b], j - endptrick) ^ endptrick;
      allowedge_[p / 2] = true;
      j += jstep;
    }
    long bv = at(childs, j);
    label_[endpoint_[p ^ 1]] = label_[bv] = 2;
    labelend_[endpoint_[p ^ 1]] = labelend_[bv] = p;
    bestedge_[bv] = -1;
    j += jstep;
    while (at(childs, j) != entrychild) {
      bv = at(childs, j);
      if (label_[bv] == 1) {
        j += jstep;
        continue;
      }
      long found = -1;
      for (long leaf : leaves(bv)) {
        if (label_[leaf] != 0) {
          found = leaf;
          break;
        }
      }
      if (found != -1) {
        assert(label_[found] == 2);
        assert(inblossom_[found] == bv);
        label_[found] = 0;
        label_[endpoint_[mate_[base_[bv]]]] = 0;
        assign_label(found, 2, labelend_[found]);
      }
      j += jstep;
    }
  }
  label_[b] = -1;
  labelend_[b] = -1;
  childs_[b].clear();
  endps_[b].clear();
  base_[b] = -1;
  blossombestedges_[b].clear();
  has_bestedges_[b] = false;
  bestedge_[b] = -1;
  unused_.push_back(b);
}

void BlossomMatcher::augment_blossom(long b, long v) {
  long t = v;
  while (parent_[t] != b) t = parent_[t];
  if (t >= n_) augment_blossom(t, v);
  auto& childs = childs_[b];
  auto& endps = endps_[b];
  const auto len = static_cast<long>(childs.size());
  auto at = [len](const std::vector<long>& vec, long idx) {
    return vec[static_cast<std::size_t>(((idx % len) + len) % len)];
  };
  const long i = std::find(childs.begin(), childs.end(), t) - childs.begin();
  long j = i;
  long jstep;
  long endptrick;
  if (i & 1) {
    j -= len;
    jstep = 1;
    endptrick = 0;
  } else {
    jstep = -1;
    endptrick = 1;
  }
  while (j != 0) {
    j += jstep;
    t = at(childs, j);
    const long p = at(endps, j - endptrick) ^ endptrick;
    if (t >= n_) augment_blossom(t, endpoint_[p]);
    j += jstep;
    t = at(childs, j);
    if (t >= n_) augment_blossom(t, endpoint_[p ^ 1]);
    mate_[endpoint_[p]] = p ^ 1;
    mate_[endpoint_[p ^ 1]] = p;
  }
  std::rotate(childs.begin(), childs.begin() + i, childs.end());
  std::rotate(endps.begin(), endps.begin() + i, endps.end());
  base_[b] = base_[childs[0]];
  assert(base_[b] == v);
}

void BlossomMatcher::augment_matching(long k) {
  const auto& e = edges_[static_cast<std::size_t>(k)];
  const long ends[2][2] = {{static_cast<long>(e.u), 2 * k + 1},
                           {static_cast<long>(e.v), 2 * k}};
  for (const auto& start : ends) {
    long s = start[0];
    long p = start[1];
    while (true) {
      const long bs = inblossom_[s];
      assert(label_[bs] == 1);
      if (bs >= n_) augment_blossom(bs, s);
      mate_[s] = p;
      if (labelend_[bs] == -1) break;
      const long t = endpoint_[labelend_[bs]];
      const long bt = inblossom_[t];
      assert(label_[bt] == 2);
      s = endpoint_[labelend_[bt]];
      const long j = endpoint_[labelend_[bt] ^ 1];
      assert(base_[bt] == t);
      if (bt >= n_) augment_blossom(bt, j);
      mate_[j] = labelend_[bt];
      p = labelend_[bt] ^ 1;
    }
  }
}

std::vector<long> BlossomMatcher::run() {
  const long n = n_;
  const auto nedge = static_cast<long>(edges_.size());
  if (n == 0) return {};
  if (nedge == 0) return std::vector<long>(static_cast<std::size_t>(n), -1);

  std::int64_t maxweight = 0;
  for (const auto& e : edges_) maxweight = std::max(maxweight, e.weight);

  endpoint_.resize(2 * nedge);
  neighbend_.assign(n, {});
  for (long k = 0; k < nedge; ++k) {
    const auto& e = edges_[static_cast<std::size_t>(k)];
    endpoint_[2 * k] = static_cast<long>(e.u);
    endpoint_[2 * k + 1] = static_cast<long>(e.v);
    neighbend_[e.u].push_back(2 * k + 1);
    neighbend_[e.v].push_back(2 * k);
  }
  mate_.assign(n, -1);
  label_.assign(2 * n, 0);
  labelend_.assign(2 * n, -1);
  inblossom_.resize(n);
  for (long v = 0; v < n; ++v) inblossom_[v] = v;
  parent_.assign(2 * n, -1);
  childs_.assign(2 * n, {});
  base_.assign(2 * n, -1);
  for (long v = 0; v < n; ++v) base_[v] = v;
  endps_.assign(2 * n, {});
  bestedge_.assign(2 * n, -1);
  blossombestedges_.assign(2 * n, {});
  has_bestedges_.assign(2 * n, false);
  unused_.clear();
  for (long b = n; b < 2 * n; ++b) unused_.push_back(b);
  dual_.assign(2 * n, 0);
  for (long v = 0; v < n; ++v) dual_[v] = maxweight;
  allowedge_.assign(nedge, false);

  for (long stage = 0; stage < n; ++stage) {
    std::fill(label_.begin(), label_.end(), 0);
    std::fill(bestedge_.begin(), bestedge_.end(), -1);
    for (long b = n; b < 2 * n; ++b) {
      blossombestedges_[b].clear();
      has_bestedges_[b] = false;
    }
    std::fill(allowedge_.begin(), allowedge_.end(), false);
    queue_.clear();

    for (long v = 0; v < n; ++v) {
      if (mate_[v] == -1 && label_[inblossom_[v]] == 0) assign_label(v, 1, -1);
    }

    bool augmented = false;
    while (true) {
      while (!queue_.empty() && !augmented) {
        const long v = queue_.back();
        queue_.pop_back();
        assert(label_[inblossom_[v]] == 1);
        for (long p : neighbend_[v]) {
          const long k = p / 2;
          const long w = endpoint_[p];
          if (inblossom_[v] == inblossom_[w]) continue;
          std::int64_t kslack = 0;
          if (!allowedge_[k]) {
            kslack = slack(k);
            if (kslack <= 0) allowedge_[k] = true;
          }
          if (allowedge_[k]) {
            if (label_[inblossom_[w]] == 0) {
              assign_label(w, 2, p ^ 1);
            } else if (label_[inblossom_[w]] == 1) {
              const long base = scan_blossom(v, w);
              if (base >= 0) {
                add_blossom(base, k);
              } else {
                augment_matching(k);
                augmented = true;
                break;
              }
            } else if (label_[w] == 0) {
              label_[w] = 2;
              labelend_[w] = p ^ 1;
            }
          } else if (label_[inblossom_[w]] == 1) {
            const long b = inblossom_[v];
            if (bestedge_[b] == -1 || kslack < slack(bestedge_[b])) {
              bestedge_[b] = k;
            }
          } else if (label_[w] == 0) {
            if (bestedge_[w] == -1 || kslack < slack(bestedge_[w])) {
              bestedge_[w] = k;
            }
          }
        }
      }
      if (augmented) break;

      // Dual adjustment. Weights are pre-doubled by the caller so the
      // halved slack below stays integral.
      int deltatype = 1;
      std::int64_t delta =
          *std::min_element(dual_.begin(), dual_.begin() + n);
      long deltaedge = -1;
      long deltablossom = -1;
      for (long v = 0; v < n; ++v) {
        if (label_[inblossom_[v]] == 0 && bestedge_[v] != -1) {
          const std::int64_t d = slack(bestedge_[v]);
          if (d < delta) {
            delta = d;
            deltatype = 2;
            deltaedge = bestedge_[v];
          }
        }
      }
      for (long b = 0; b < 2 * n; ++b) {
        if (parent_[b] == -1 && label_[b] == 1 && bestedge_[b] != -1) {
          const std::int64_t kslack = slack(bestedge_[b]);
          assert(kslack % 2 == 0);
          const std::int64_t d = kslack / 2;
          if (d < delta) {
            delta = d;
            deltatype = 3;
            deltaedge = bestedge_[b];
          }
        }
      }
      for (long b = n; b < 2 * n; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1 && label_[b] == 2 &&
            dual_[b] < delta) {
          delta = dual_[b];
          deltatype = 4;
          deltablossom = b;
        }
      }

      for (long v = 0; v < n; ++v) {
        if (label_[inblossom_[v]] == 1) {
          dual_[v] -= delta;
        } else if (label_[inblossom_[v]] == 2) {
          dual_[v] += delta;
        }
      }
      for (long b = n; b < 2 * n; ++b) {
        if (base_[b] >= 0 && parent_[b] == -1) {
          if (label_[b] == 1) {
            dual_[b] += delta;
          } else if (label_[b] == 2) {
            dual_[b] -= delta;
          }
        }
      }

      if (deltatype == 1) {
        break;
      } else if (deltatype == 2) {
        allowedge_[deltaedge] = true;
        const auto& e = edges_[static_cast<std::size_t>(deltaedge)];
        long i = static_cast<long>(e.u);
        if (label_[inblossom_[i]] == 0) i = static_cast<long>(e.v);
        assert(label_[inblossom_[i]] == 1);
        queue_.push_back(i);
      } else if (deltatype == 3) {
        allowedge_[deltaedge] = true;
        const auto& e = edges_[static_cast<std::size_t>(deltaedge)];
        const long i = static_cast<long>(e.u);
        assert(label_[inblossom_[i]] == 1);
        queue_.push_back(i);
      } else {
        expand_blossom(deltablossom, false);
      }
    }
    if (!augmented) break;

    for (long b = n; b < 2 * n; ++b) {
      if (parent_[b] == -1 && base_[b] >= 0 && label_[b] == 1 &&
          dual_[b] == 0) {
        expand_blossom(b, true);
      }
    }
  }

  std::vector<long> mate(static_cast<std::size_t>(n), -1);
  for (long v = 0; v < n; ++v) {
    if (mate_[v] >= 0) mate[v] = endpoint_[mate_[v]];
  }
  return mate;
}

}  // namespace

std::vector<long> max_weight_matching(std::size_t vertex_count,
                                      const std::vector<WeightedEdge>& edges) {
  // Doubling keeps every dual update integral.
  std::vector<WeightedEdge> doubled = edges;
  for (auto& e : doubled) e.weight *= 2;
  return BlossomMatcher(vertex_count, doubled).run();
}

}  // namespace offload
