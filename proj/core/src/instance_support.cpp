#include "instance_support.hpp"

#include <algorithm>
#include <functional>

namespace hypernorm::detail {

  std::vector<std::vector<std::size_t>> index_combinations(std::size_t n,
                                                           std::size_t k,
                                                           bool repeat) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              cur;
    std::function<void(std::size_t)>     rec = [&](std::size_t start) {
      if (cur.size() == k) {
        out.push_back(cur);
        return;
      }
      for (std::size_t i = start; i < n; ++i) {
        cur.push_back(i);
        rec(repeat ? i : i + 1);
        cur.pop_back();
      }
    };
    rec(0);
    return out;
  }

  std::vector<std::vector<Q01>> weight_vectors(std::size_t k,
                                               unsigned    max_den) {
    std::vector<std::vector<Q01>> out;
    if (k == 0) {
      return out;
    }
    std::vector<Q01> grid;
    for (auto const& q : qunit_grid(max_den)) {
      grid.push_back(q.q01());
    }
    grid.push_back(Q01::one());
    std::vector<Q01>                            cur;
    std::function<void(mpq_class const&)> rec = [&](mpq_class const& rest) {
      if (cur.size() + 1 == k) {
        if (sgn(rest) > 0 && rest.get_den() <= max_den) {
          cur.push_back(Q01(rest));
          out.push_back(cur);
          cur.pop_back();
        }
        return;
      }
      for (auto const& w : grid) {
        if (cmp(w.value(), rest) >= 0) {
          break;
        }
        cur.push_back(w);
        rec(rest - w.value());
        cur.pop_back();
      }
    };
    rec(mpq_class(1));
    return out;
  }

  std::size_t uniform_index(std::size_t n, std::mt19937_64& rng) {
    return static_cast<std::size_t>(rng() % n);
  }

  std::vector<Q01> random_weights(std::size_t      k,
                                  unsigned         max_den,
                                  std::mt19937_64& rng) {
    std::vector<unsigned long> raw(k);
    unsigned long              total = 0;
    for (auto& r : raw) {
      r = 1 + uniform_index(max_den, rng);
      total += r;
    }
    std::vector<Q01> out;
    out.reserve(k);
    for (auto r : raw) {
      out.emplace_back(static_cast<long>(r), total);
    }
    return out;
  }

  std::vector<std::size_t> random_subset(std::size_t      n,
                                         std::size_t      k,
                                         std::mt19937_64& rng) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) {
      idx[i] = i;
    }
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(idx[i], idx[i + uniform_index(n - i, rng)]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
  }

  std::vector<std::size_t> random_multiset(std::size_t      n,
                                           std::size_t      k,
                                           std::mt19937_64& rng) {
    std::vector<std::size_t> idx(k);
    for (auto& i : idx) {
      i = uniform_index(n, rng);
    }
    std::sort(idx.begin(), idx.end());
    return idx;
  }

  std::vector<Q01> uniform_weights(std::size_t k) {
    return std::vector<Q01>(k, Q01(1, static_cast<unsigned long>(k)));
  }

  std::vector<Q01> renormalised(std::vector<Q01> const& ws) {
    mpq_class total;
    for (auto const& w : ws) {
      total += w.value();
    }
    std::vector<Q01> out;
    out.reserve(ws.size());
    for (auto const& w : ws) {
      out.emplace_back(mpq_class(w.value() / total));
    }
    return out;
  }

  std::vector<Value> dedupe(std::vector<Value> values) {
    std::set<Value>    seen;
    std::vector<Value> out;
    out.reserve(values.size());
    for (auto& v : values) {
      if (seen.insert(v).second) {
        out.push_back(std::move(v));
      }
    }
    return out;
  }

  TensorValue make_trivial_nary(
      std::vector<std::pair<std::size_t, Value>> parts) {
    TrivialNary::Parts out;
    for (auto& [tag, v] : parts) {
      out.emplace(tag, NaryPart<TrivialTricocycloid, Value>{Point{},
                                                             std::move(v)});
    }
    return TrivialNary(std::move(out));
  }

}  // namespace hypernorm::detail
