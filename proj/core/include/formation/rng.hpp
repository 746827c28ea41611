#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace formation {

// Thin wrapper over mt19937_64 so every draw goes through one place and the
// sequences stay identical across standard libraries (no distribution objects).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // uniform in [0, n); n > 0
    std::uint64_t below(std::uint64_t n) { return engine_() % n; }

    // k distinct values from [0, n), in draw order (partial Fisher-Yates)
    std::vector<int> sample(int n, int k) {
        std::vector<int> pool(n);
        for (int i = 0; i < n; ++i)
            pool[i] = i;
        std::vector<int> out;
        out.reserve(k);
        for (int i = 0; i < k; ++i) {
            int j = i + static_cast<int>(below(n - i));
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace formation
