#include "itersplit/grid.hpp"

#include <numeric>
#include <string>

namespace itersplit {

std::vector<FareyFrame> valid_frames(std::int64_t bound) {
  std::vector<FareyFrame> frames;
  for (std::int64_t p = -bound; p <= bound; ++p) {
    for (std::int64_t q = -bound; q <= bound; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (std::int64_t r = -bound; r <= bound; ++r) {
        for (std::int64_t s = -bound; s <= bound; ++s) {
          const std::int64_t det = p * s - q * r;
          if ((det == 1 || det == -1) && std::gcd(r, s) == 1) {
            frames.push_back(validate_frame(p, q, r, s));
          }
        }
      }
    }
  }
  return frames;
}

std::vector<TwistSequence> twist_sequences(std::size_t max_length,
                                           const std::vector<std::int64_t>& values) {
  std::vector<TwistSequence> out;
  std::vector<std::vector<std::int64_t>> layer = {{}};
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::vector<std::vector<std::int64_t>> next;
    next.reserve(layer.size() * values.size());
    for (const auto& prefix : layer) {
      for (std::int64_t v : values) {
        auto seq = prefix;
        seq.push_back(v);
        next.push_back(std::move(seq));
      }
    }
    for (const auto& seq : next) out.emplace_back(seq);
    layer = std::move(next);
  }
  return out;
}

std::vector<std::int64_t> nonzero_range(std::int64_t bound) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = -bound; v <= bound; ++v) {
    if (v != 0) out.push_back(v);
  }
  return out;
}

std::vector<ContinuedFraction2B> continued_fractions(std::size_t max_depth,
                                                     const std::vector<std::int64_t>& b_values) {
  std::vector<ContinuedFraction2B> out;
  for (std::size_t len = 1; len <= max_depth + 1; ++len) {
    const std::size_t sign_patterns = std::size_t{1} << len;
    std::size_t b_patterns = 1;
    for (std::size_t i = 0; i < len; ++i) b_patterns *= b_values.size();
    for (std::size_t sp = 0; sp < sign_patterns; ++sp) {
      std::vector<int> a(len);
      for (std::size_t i = 0; i < len; ++i) a[i] = (sp >> i) & 1 ? -1 : 1;
      for (std::size_t bp = 0; bp < b_patterns; ++bp) {
        std::vector<std::int64_t> b(len);
        std::size_t rem = bp;
        for (std::size_t i = 0; i < len; ++i) {
          b[i] = b_values[rem % b_values.size()];
          rem /= b_values.size();
        }
        try {
          out.push_back(validate_cf(a, std::move(b)));
        } catch (const CfError&) {
          // b_0 = 0 or k_i = 0: not a valid position.
        }
      }
    }
  }
  return out;
}

std::vector<std::uint64_t> sample_indices(std::uint64_t total, std::uint64_t count) {
  std::vector<std::uint64_t> out;
  if (count >= total) {
    out.resize(total);
    std::iota(out.begin(), out.end(), std::uint64_t{0});
    return out;
  }
  // i -> i * stride mod total is a bijection when gcd(stride, total) = 1.
  std::uint64_t stride = 1000003;
  while (std::gcd(stride, total) != 1) ++stride;
  out.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(i) * stride) % total));
  }
  return out;
}

unsigned worker_count() {
  if (const char* env = std::getenv("ITERSPLIT_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace itersplit
