#pragma once

#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace derain {

// Error hierarchy. Shape/contract violations are programming or config errors,
// IoError carries the offending path in its message.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

class NumericError : public Error {
public:
    explicit NumericError(const std::string& msg) : Error(msg) {}
};

using Shape = std::vector<int64_t>;

inline int64_t shape_numel(const Shape& s) {
    int64_t n = 1;
    for (int64_t d : s) n *= d;
    return n;
}

inline std::string shape_str(const Shape& s) {
    std::ostringstream os;
    os << '[';
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << ',';
        os << s[i];
    }
    os << ']';
    return os.str();
}

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ContractError(msg);
}

// Throws naming the first differing axis, or the rank if ranks differ.
inline void require_same_shape(const char* op, const Shape& a, const Shape& b) {
    if (a == b) return;
    std::ostringstream os;
    os << op << ": shape mismatch";
    if (a.size() != b.size()) {
        os << " (rank " << a.size() << " vs " << b.size() << ")";
    } else {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) {
                os << " at axis " << i;
                break;
            }
        }
    }
    os << ": " << shape_str(a) << " vs " << shape_str(b);
    throw ShapeError(os.str());
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Deterministic, platform-independent RNG. All randomness in the project flows
// from one root seed through named sub-streams so runs are bit-reproducible.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(splitmix64(seed ^ 0x6a09e667f3bcc909ULL)) {}

    static uint64_t stream_seed(uint64_t root, const std::string& name, uint64_t index = 0) {
        uint64_t h = 0xcbf29ce484222325ULL ^ root;
        for (unsigned char c : name) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
        return splitmix64(h ^ splitmix64(index));
    }

    static Rng stream(uint64_t root, const std::string& name, uint64_t index = 0) {
        return Rng(stream_seed(root, name, index));
    }

    uint64_t next_u64() {
        state_ = splitmix64(state_);
        return state_;
    }

    // Uniform in [0,1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    int64_t uniform_int(int64_t n) {
        return int64_t((static_cast<unsigned __int128>(next_u64()) *
                        static_cast<unsigned __int128>(n)) >> 64);
    }

private:
    uint64_t state_;
};

}  // namespace derain
