#include "overcubic/oracle.hpp"

#include <map>
#include <mutex>

#include "overcubic/errors.hpp"

namespace overcubic {

namespace {

constexpr std::size_t kListBound = 6;

// Visits every overpartition of `rest` whose parts are drawn from sizes
// <= largest (stepping by `stride`). Each distinct size used branches into
// plain and overlined first occurrence.
std::uint64_t visit(std::size_t rest, std::size_t largest, std::size_t stride) {
  if (rest == 0) return 1;
  std::uint64_t total = 0;
  for (std::size_t s = largest; s >= stride; s -= stride) {
    for (std::size_t used = s; used <= rest; used += s) {
      for (int overlined = 0; overlined < 2; ++overlined) total += visit(rest - used, s - stride, stride);
    }
    if (s < stride * 2) break;
  }
  return total;
}

void collect(std::size_t rest, std::size_t largest, std::size_t stride, std::string prefix,
             std::vector<std::string>& out) {
  if (rest == 0) {
    out.push_back(prefix.empty() ? "()" : prefix);
    return;
  }
  for (std::size_t s = largest; s >= stride; s -= stride) {
    for (std::size_t k = 1; k * s <= rest; ++k) {
      for (bool over : {false, true}) {
        std::string text = prefix;
        for (std::size_t i = 0; i < k; ++i) {
          if (!text.empty()) text += "+";
          text += std::to_string(s);
          if (over && i == 0) text += "'";
        }
        collect(rest - k * s, s - stride, stride, text, out);
      }
    }
    if (s < stride * 2) break;
  }
}

void check_overpartition_bound(std::size_t n) {
  if (n > kOverpartitionBound)
    throw DomainError("enumeration bound is n <= " + std::to_string(kOverpartitionBound) + "; use series engine");
}

void check_overcubic_bounds(std::int64_t c, std::size_t n) {
  if (c < 1 || c > kOvercubicMaxC)
    throw DomainError("enumeration needs 1 <= c <= " + std::to_string(kOvercubicMaxC) + "; use series engine");
  if (n > kOvercubicBound)
    throw DomainError("enumeration bound is n <= " + std::to_string(kOvercubicBound) + "; use series engine");
}

// Calls fn(parts) for every composition of n into `slots` non-negative parts.
template <typename Fn>
void compositions(std::size_t n, std::size_t slots, std::vector<std::size_t>& parts, Fn&& fn) {
  if (parts.size() + 1 == slots) {
    parts.push_back(n);
    fn(parts);
    parts.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= n; ++k) {
    parts.push_back(k);
    compositions(n - k, slots, parts, fn);
    parts.pop_back();
  }
}

}  // namespace

std::uint64_t enumerate_overpartitions(std::size_t n, bool even_only) {
  check_overpartition_bound(n);
  static std::mutex lock;
  static std::map<std::pair<std::size_t, bool>, std::uint64_t> memo;
  std::lock_guard guard(lock);
  auto it = memo.find({n, even_only});
  if (it != memo.end()) return it->second;
  std::uint64_t count = 0;
  if (n == 0) {
    count = 1;
  } else if (!even_only) {
    count = visit(n, n, 1);
  } else if (n % 2 == 0) {
    count = visit(n, n, 2);
  }
  memo[{n, even_only}] = count;
  return count;
}

std::uint64_t enumerate_overcubic(std::int64_t c, std::size_t n) {
  check_overcubic_bounds(c, n);
  std::uint64_t total = 0;
  std::vector<std::size_t> parts;
  compositions(n, static_cast<std::size_t>(c), parts, [&](const std::vector<std::size_t>& sizes) {
    std::uint64_t prod = enumerate_overpartitions(sizes[0], false);
    for (std::size_t i = 1; i < sizes.size() && prod != 0; ++i) prod *= enumerate_overpartitions(sizes[i], true);
    total += prod;
  });
  return total;
}

std::vector<std::string> list_overpartitions(std::size_t n, bool even_only) {
  if (n > kListBound) throw DomainError("listing is limited to n <= " + std::to_string(kListBound));
  std::vector<std::string> out;
  if (n == 0) {
    out.push_back("()");
  } else if (!even_only) {
    collect(n, n, 1, "", out);
  } else if (n % 2 == 0) {
    collect(n, n, 2, "", out);
  }
  return out;
}

std::vector<std::string> list_overcubic(std::int64_t c, std::size_t n) {
  check_overcubic_bounds(c, n);
  if (n > kListBound) throw DomainError("listing is limited to n <= " + std::to_string(kListBound));
  std::vector<std::string> out;
  std::vector<std::size_t> parts;
  compositions(n, static_cast<std::size_t>(c), parts, [&](const std::vector<std::size_t>& sizes) {
    std::vector<std::string> acc = list_overpartitions(sizes[0], false);
    for (std::size_t i = 1; i < sizes.size(); ++i) {
      std::vector<std::string> next;
      for (const auto& head : acc)
        for (const auto& layer : list_overpartitions(sizes[i], true)) next.push_back(head + " | " + layer);
      acc = std::move(next);
    }
    out.insert(out.end(), acc.begin(), acc.end());
  });
  return out;
}

TruncatedSeries naive_product_series(const std::vector<EtaTerm>& terms, std::size_t n) {
  if (n == 0) throw DomainError("precision must be at least 1");
  std::vector<Integer> a(n);
  a[0] = 1;
  for (const auto& t : terms) {
    if (t.h < 1) throw DomainError("eta scale must be positive");
    for (std::size_t j = static_cast<std::size_t>(t.h); j < n; j += static_cast<std::size_t>(t.h)) {
      if (t.e >= 0) {
        for (std::int64_t rep = 0; rep < t.e; ++rep)
          for (std::size_t i = n; i-- > j;) a[i] -= a[i - j];
      } else {
        for (std::int64_t rep = 0; rep < -t.e; ++rep) {
          // a * (1 + q^j + q^(2j) + ...), truncated.
          std::vector<Integer> out(n);
          for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k <= i; k += j) out[i] += a[i - k];
          a = std::move(out);
        }
      }
    }
  }
  return TruncatedSeries::exact(std::move(a));
}

}  // namespace overcubic
