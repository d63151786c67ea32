#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace detrelay {

// A length-q bit vector over GF(2). Level 1 is the top (most significant)
// signal level, level q the bottom.
class LevelVector {
public:
    LevelVector() = default;
    explicit LevelVector(int q);
    LevelVector(std::initializer_list<int> bits);

    int size() const { return q_; }

    // Levels are 1-based.
    int get(int level) const;
    void set(int level, int bit);

    void clear();          // all bits to 0, length kept
    void resize(int q);    // re-dimension and zero

    void xor_with(const LevelVector& other);  // dimension must match

    bool operator==(const LevelVector& other) const = default;

    bool all_zero() const;
    std::string to_string() const;  // "101"; "-" when q == 0

private:
    int q_ = 0;
    std::vector<uint64_t> w_;
};

// S^(q-n) x: the top n bits of x land on the bottom n levels, the rest is 0.
// A zero-gain link delivers nothing; n == q is the identity.
LevelVector shift_apply(const LevelVector& x, int gain, int q);

// Componentwise XOR of all vectors; the empty sum is the zero vector of
// length q. Mixed lengths are a dimension error.
LevelVector superpose(const std::vector<LevelVector>& vs, int q);

// One transmitter and its channel gain toward the receiving node.
struct TransmitInput {
    LevelVector signal;
    int gain = 0;
};

// The received vector: XOR over all inputs of shift_apply(signal, gain, q).
LevelVector receive(const std::vector<TransmitInput>& inputs, int q);

}  // namespace detrelay
