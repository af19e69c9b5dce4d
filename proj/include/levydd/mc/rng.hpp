// Counter-based random numbers (Philox 4x32-10, Salmon et al. SC 2011).
// Each path owns a substream keyed by (seed, path_index), so ensembles are
// bitwise reproducible under any parallel schedule.

#pragma once

#include <cmath>
#include <cstdint>

namespace levydd::mc {

struct Philox4x32 {
    // key = (seed lo, seed hi ^ stream), counter = (block, 0, stream lo, stream hi)
    std::uint32_t key0, key1;
    std::uint32_t ctr2, ctr3;
    std::uint64_t block = 0;

    Philox4x32(std::uint64_t seed, std::uint64_t stream)
        : key0(std::uint32_t(seed)), key1(std::uint32_t(seed >> 32)),
          ctr2(std::uint32_t(stream)), ctr3(std::uint32_t(stream >> 32)) {}

    static void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi, std::uint32_t& lo) {
        const std::uint64_t p = std::uint64_t(a) * b;
        hi = std::uint32_t(p >> 32);
        lo = std::uint32_t(p);
    }

    // one 128-bit block of output
    void next_block(std::uint32_t out[4]) {
        std::uint32_t c0 = std::uint32_t(block), c1 = std::uint32_t(block >> 32);
        std::uint32_t c2 = ctr2, c3 = ctr3;
        std::uint32_t k0 = key0, k1 = key1;
        ++block;
        for (int round = 0; round < 10; ++round) {
            std::uint32_t hi0, lo0, hi1, lo1;
            mulhilo(0xD2511F53u, c0, hi0, lo0);
            mulhilo(0xCD9E8D57u, c2, hi1, lo1);
            const std::uint32_t n0 = hi1 ^ c1 ^ k0;
            const std::uint32_t n1 = lo1;
            const std::uint32_t n2 = hi0 ^ c3 ^ k1;
            const std::uint32_t n3 = lo0;
            c0 = n0; c1 = n1; c2 = n2; c3 = n3;
            k0 += 0x9E3779B9u;
            k1 += 0xBB67AE85u;
        }
        out[0] = c0; out[1] = c1; out[2] = c2; out[3] = c3;
    }
};

// Distribution layer over one Philox substream.
class PathRng {
public:
    PathRng(std::uint64_t seed, std::uint64_t path_index) : gen_(seed, path_index) {}

    std::uint32_t next_u32() {
        if (have_ == 0) {
            gen_.next_block(buf_);
            have_ = 4;
        }
        return buf_[4 - have_--];
    }

    std::uint64_t next_u64() {
        const std::uint64_t hi = next_u32();
        return (hi << 32) | next_u32();
    }

    // uniform on (0,1); never returns 0 or 1
    double uniform() {
        return (double(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    // standard normal via Box-Muller; second value of the pair is cached
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform(), u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double th = 2.0 * M_PI * u2;
        spare_ = r * std::sin(th);
        has_spare_ = true;
        return r * std::cos(th);
    }

    // exponential with the given mean
    double exponential(double mean) {
        return -mean * std::log(uniform());
    }

private:
    Philox4x32 gen_;
    std::uint32_t buf_[4] = {0, 0, 0, 0};
    int have_ = 0;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace levydd::mc
