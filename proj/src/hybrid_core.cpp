#include "ccent/hybrid_core.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ccent {

namespace {

std::uint32_t fallback_width(std::size_t k) {
  return static_cast<std::uint32_t>(std::max<std::size_t>(1, (k + 3) / 4));
}

}  // namespace

HybridAccumulator::HybridAccumulator(NodeId n, std::span<const NodeId> sample,
                                     const PivotAssignment& pivots, double eps)
    : HybridAccumulator(n, sample, pivots, eps, {}, {}, 0.0) {}

HybridAccumulator::HybridAccumulator(NodeId n, std::span<const NodeId> sample,
                                     const PivotAssignment& pivots, double eps,
                                     std::span<const double> beta,
                                     std::span<const double> beta_adj, double tau) {
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must be in (0, 1)");
  if (sample.empty()) throw std::invalid_argument("empty sample");
  n_ = n;
  k_ = static_cast<SampleIndex>(sample.size());
  eps_ = eps;
  weighted_ = !beta.empty();
  tau_ = tau;
  sample_nodes_.assign(sample.begin(), sample.end());
  if (weighted_) {
    beta_.assign(beta.begin(), beta.end());
    beta_adj_.assign(beta_adj.begin(), beta_adj.end());
    assert(beta_.size() == n_ && beta_adj_.size() == sample.size());
  }

  sample_idx_of_.assign(n_, kNoSample);
  for (SampleIndex i = 0; i < k_; ++i) {
    if (sample_nodes_[i] >= n_) throw std::invalid_argument("sampled node out of range");
    if (sample_idx_of_[sample_nodes_[i]] != kNoSample)
      throw std::invalid_argument("duplicate sampled node");
    sample_idx_of_[sample_nodes_[i]] = i;
  }

  pivot_idx_.assign(n_, kNoSample);
  pivot_dist_ = pivots.dist;
  threshold_.assign(n_, 0.0);
  for (NodeId v = 0; v < n_; ++v) {
    if (pivots.pivot[v] == kNoNode)
      throw std::invalid_argument("node " + std::to_string(v) + " unreachable from the sample");
    pivot_idx_[v] = sample_idx_of_[pivots.pivot[v]];
    assert(pivot_idx_[v] != kNoSample);
    threshold_[v] = static_cast<double>(pivots.dist[v]) / eps_;
  }

  if (weighted_) {
    s_exact_w_.assign(k_, 0.0);
    lcw_sum_.assign(n_, 0.0);
    var_est_.assign(n_, 0.0);
    hcw_sum_.assign(n_, 0.0);
    hcw_sqerr_.assign(n_, 0.0);
    hc_beta_.assign(n_, 0.0);
    hw_sum_.assign(n_, 0.0);
    h_beta_.assign(n_, 0.0);
  } else {
    s_exact_.assign(k_, 0);
    lc_sum_.assign(n_, 0);
    lc_sum_sq_.assign(n_, 0.0);
    hc_sum_.assign(n_, 0);
    hc_sqerr_.assign(n_, 0.0);
    h_sum_.assign(n_, 0);
  }
  lc_cnt_.assign(n_, 0);
  h_cnt_.assign(n_, 0);
  delta_.assign(static_cast<std::size_t>(k_) * k_, kInfDist);

  fb_width_ = fallback_width(k_);
  fb_dist_.assign(static_cast<std::size_t>(n_) * fb_width_, 0);
  fb_sample_.assign(static_cast<std::size_t>(n_) * fb_width_, kNoSample);
  fb_cnt_.assign(n_, 0);

  last_pass_.assign(k_, kNoSample);
  dist_c_.assign(k_, 0);
  lists_.resize(k_);
}

void HybridAccumulator::begin_pass(SampleIndex i) {
  assert(i < k_);
  pass_ = i;
  visits_ = 0;
  curt_ = 0;
  thresh_.assign(1, 0.0);
  thresh_nodes_.assign(1, {});
  bin_cnt_.assign(1, 0);
  if (weighted_) {
    bin_wsum_.assign(1, 0.0);
    bin_beta_.assign(1, 0.0);
    pass_beta_ = beta_[sample_nodes_[i]];
    pass_beta_adj_ = beta_adj_[i];
    pass_var_coef_ = pass_beta_ < tau_ ? (tau_ - pass_beta_) * tau_ : 0.0;
  } else {
    bin_sum_.assign(1, 0);
  }
}

void HybridAccumulator::account_l(NodeId v, Dist d) {
  ++lc_cnt_[v];
  if (weighted_) {
    lcw_sum_[v] += pass_beta_adj_ * static_cast<double>(d);
    var_est_[v] += static_cast<double>(d) * static_cast<double>(d) * pass_var_coef_;
  } else {
    lc_sum_[v] += d;
    lc_sum_sq_[v] += static_cast<double>(d) * static_cast<double>(d);
  }
}

void HybridAccumulator::account_hc(NodeId v, Dist d, Dist pivot_dist) {
  const double e = static_cast<double>(d) - static_cast<double>(pivot_dist);
  if (weighted_) {
    hcw_sum_[v] += pass_beta_ * static_cast<double>(d);
    hcw_sqerr_[v] += pass_beta_ * e * e;
    hc_beta_[v] += pass_beta_;
  } else {
    hc_sum_[v] += d;
    hc_sqerr_[v] += e * e;
  }
}

void HybridAccumulator::fallback_insert(NodeId v, Dist d) {
  // Keep the fb_width_ largest distances, ties toward the smaller sample
  // node id; slots are ordered best-first.
  const NodeId cand_id = sample_nodes_[pass_];
  Dist* fd = fb_dist_.data() + static_cast<std::size_t>(v) * fb_width_;
  SampleIndex* fs = fb_sample_.data() + static_cast<std::size_t>(v) * fb_width_;
  std::uint32_t cnt = fb_cnt_[v];
  auto beats = [&](Dist d2, SampleIndex s2) {
    return d > d2 || (d == d2 && cand_id < sample_nodes_[s2]);
  };
  if (cnt == fb_width_ && !beats(fd[cnt - 1], fs[cnt - 1])) return;
  std::uint32_t pos = cnt < fb_width_ ? cnt : fb_width_ - 1;
  while (pos > 0 && beats(fd[pos - 1], fs[pos - 1])) {
    fd[pos] = fd[pos - 1];
    fs[pos] = fs[pos - 1];
    --pos;
  }
  fd[pos] = d;
  fs[pos] = pass_;
  if (cnt < fb_width_) fb_cnt_[v] = cnt + 1;
}

double HybridAccumulator::fallback_mean(NodeId v) const {
  const SampleIndex pj = pivot_idx_[v];
  const Dist* fd = fb_dist_.data() + static_cast<std::size_t>(v) * fb_width_;
  const SampleIndex* fs = fb_sample_.data() + static_cast<std::size_t>(v) * fb_width_;
  const std::uint32_t cnt = fb_cnt_[v];
  assert(cnt > 0);
  if (weighted_) {
    double num = 0.0, den = 0.0;
    for (std::uint32_t s = 0; s < cnt; ++s) {
      const double b = beta_[sample_nodes_[fs[s]]];
      const double e = static_cast<double>(fd[s]) -
                       static_cast<double>(delta_[static_cast<std::size_t>(pj) * k_ + fs[s]]);
      num += b * e * e;
      den += b;
    }
    return num / den;
  }
  double acc = 0.0;
  for (std::uint32_t s = 0; s < cnt; ++s) {
    const double e = static_cast<double>(fd[s]) -
                     static_cast<double>(delta_[static_cast<std::size_t>(pj) * k_ + fs[s]]);
    acc += e * e;
  }
  return acc / static_cast<double>(cnt);
}

void HybridAccumulator::visit(NodeId u, Dist d) {
  assert(pass_ != kNoSample);
  ++visits_;
  if (weighted_) {
    s_exact_w_[pass_] += beta_[u] * static_cast<double>(d);
  } else {
    s_exact_[pass_] += d;
  }

  const SampleIndex j = sample_idx_of_[u];
  if (j != kNoSample) {
    delta_[static_cast<std::size_t>(j) * k_ + pass_] = d;
    last_pass_[j] = pass_;
    dist_c_[j] = d;
    for (const Deferred& e : lists_[j]) {
      if (static_cast<double>(d) > threshold_[e.node]) {
        account_hc(e.node, e.d, d);
      } else {
        account_l(e.node, e.d);
      }
    }
    lists_[j].clear();
    return;
  }

  fallback_insert(u, d);

  const SampleIndex pj = pivot_idx_[u];
  if (last_pass_[pj] == pass_) {
    // Pivot already settled in this pass: classify against its distance.
    if (static_cast<double>(dist_c_[pj]) > threshold_[u]) {
      account_hc(u, d, dist_c_[pj]);
    } else {
      account_l(u, d);
    }
  } else if (static_cast<double>(d + pivot_dist_[u]) <= threshold_[u]) {
    // Triangle inequality certifies d(c_i, c(u)) <= d + Delta(u) <= T(u).
    account_l(u, d);
  } else {
    lists_[pj].push_back(Deferred{u, d});
  }

  if (pj == pass_) {
    // This source is u's pivot: record the threshold for the tail sums.
    assert(d == pivot_dist_[u]);
    if (thresh_.size() > 1 && thresh_.back() == threshold_[u]) {
      thresh_nodes_.back().push_back(u);
    } else {
      thresh_.push_back(threshold_[u]);
      thresh_nodes_.push_back({u});
      bin_cnt_.push_back(0);
      if (weighted_) {
        bin_wsum_.push_back(0.0);
        bin_beta_.push_back(0.0);
      } else {
        bin_sum_.push_back(0);
      }
    }
  }

  while (curt_ + 1 < thresh_.size() && static_cast<double>(d) > thresh_[curt_ + 1]) ++curt_;
  if (static_cast<double>(d) > thresh_[curt_]) {
    bin_cnt_[curt_] += 1;
    if (weighted_) {
      bin_wsum_[curt_] += beta_[u] * static_cast<double>(d);
      bin_beta_[curt_] += beta_[u];
    } else {
      bin_sum_[curt_] += d;
    }
  }
}

void HybridAccumulator::end_pass() {
  assert(visits_ == n_ && "every pass must settle all nodes");
  for (const auto& list : lists_) {
    (void)list;
    assert(list.empty() && "deferred entries must drain when the pivot settles");
  }

  // Tail sums over the bins, skipping the sentinel: nodes binned at index
  // >= t are exactly those beyond thresh_[t].
  std::uint64_t tail_cnt = 0;
  Dist tail_sum = 0;
  double tail_wsum = 0.0, tail_beta = 0.0;
  for (std::size_t t = thresh_.size() - 1; t >= 1; --t) {
    tail_cnt += bin_cnt_[t];
    if (weighted_) {
      tail_wsum += bin_wsum_[t];
      tail_beta += bin_beta_[t];
    } else {
      tail_sum += bin_sum_[t];
    }
    for (const NodeId u : thresh_nodes_[t]) {
      h_cnt_[u] = tail_cnt;
      if (weighted_) {
        hw_sum_[u] = tail_wsum;
        h_beta_[u] = tail_beta;
      } else {
        h_sum_[u] = tail_sum;
      }
    }
  }
  pass_ = kNoSample;
}

HybridAccumulator::Result HybridAccumulator::finalize() && {
  Result out;
  out.table.sum_est.assign(n_, 0.0);
  out.table.sqerr_est.assign(n_, 0.0);
  out.table.exact.assign(n_, 0);
  out.l_num.assign(n_, 0);
  out.lc_num.assign(n_, 0);
  out.hc_num.assign(n_, 0);
  out.h_num.assign(n_, 0);

  for (NodeId v = 0; v < n_; ++v) {
    const SampleIndex j = sample_idx_of_[v];
    if (j != kNoSample) {
      out.table.sum_est[v] =
          weighted_ ? s_exact_w_[j] : static_cast<double>(s_exact_[j]);
      out.table.exact[v] = 1;
      continue;
    }
    const std::uint64_t lc_num = lc_cnt_[v];
    const std::uint64_t hc_num = k_ - lc_num;
    const std::uint64_t h_num = h_cnt_[v];
    assert(lc_num >= 1 && "pivot is always a sampled node inside the threshold");
    const std::uint64_t l_num = (n_ - 1) - h_num - hc_num;
    out.l_num[v] = l_num;
    out.lc_num[v] = lc_num;
    out.hc_num[v] = hc_num;
    out.h_num[v] = h_num;

    if (weighted_) {
      out.table.sum_est[v] = lcw_sum_[v] + hcw_sum_[v] + hw_sum_[v];
      double hterm = 0.0;
      if (h_beta_[v] > 0.0) {
        const double hmean = hc_beta_[v] > 0.0 ? hcw_sqerr_[v] / hc_beta_[v] : fallback_mean(v);
        hterm = hmean * h_beta_[v];
      }
      out.table.sqerr_est[v] = var_est_[v] + hterm;
    } else {
      out.table.sum_est[v] =
          static_cast<double>(lc_sum_[v]) *
              (static_cast<double>(l_num) / static_cast<double>(lc_num)) +
          static_cast<double>(hc_sum_[v]) + static_cast<double>(h_sum_[v]);
      const double lc_mean = static_cast<double>(lc_sum_[v]) / static_cast<double>(lc_num);
      const double lvar =
          std::max(0.0, lc_sum_sq_[v] / static_cast<double>(lc_num) - lc_mean * lc_mean);
      const double lterm =
          lvar / static_cast<double>(lc_num) * static_cast<double>(l_num);
      double hterm = 0.0;
      if (h_num > 0) {
        const double hmean =
            hc_num > 0 ? hc_sqerr_[v] / static_cast<double>(hc_num) : fallback_mean(v);
        hterm = hmean * static_cast<double>(h_num);
      }
      out.table.sqerr_est[v] = lterm + hterm;
    }
  }
  return out;
}

}  // namespace ccent
