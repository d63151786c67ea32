#include "detrelay/level_vector.hpp"

#include <stdexcept>

namespace detrelay {

LevelVector::LevelVector(int q) {
    if (q < 0) throw std::invalid_argument("level vector length must be >= 0");
    q_ = q;
    w_.assign((static_cast<size_t>(q) + 63) / 64, 0);
}

LevelVector::LevelVector(std::initializer_list<int> bits) : LevelVector(static_cast<int>(bits.size())) {
    int level = 1;
    for (int b : bits) set(level++, b);
}

int LevelVector::get(int level) const {
    if (level < 1 || level > q_) throw std::out_of_range("signal level out of range");
    size_t i = static_cast<size_t>(level - 1);
    return static_cast<int>((w_[i >> 6] >> (i & 63)) & 1u);
}

void LevelVector::set(int level, int bit) {
    if (level < 1 || level > q_) throw std::out_of_range("signal level out of range");
    if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
    size_t i = static_cast<size_t>(level - 1);
    uint64_t mask = uint64_t(1) << (i & 63);
    if (bit)
        w_[i >> 6] |= mask;
    else
        w_[i >> 6] &= ~mask;
}

void LevelVector::clear() {
    for (uint64_t& x : w_) x = 0;
}

void LevelVector::resize(int q) {
    if (q < 0) throw std::invalid_argument("level vector length must be >= 0");
    q_ = q;
    w_.assign((static_cast<size_t>(q) + 63) / 64, 0);
}

void LevelVector::xor_with(const LevelVector& other) {
    if (other.q_ != q_) throw std::invalid_argument("level vector dimension mismatch");
    for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= other.w_[i];
}

bool LevelVector::all_zero() const {
    for (uint64_t x : w_)
        if (x) return false;
    return true;
}

std::string LevelVector::to_string() const {
    if (q_ == 0) return "-";
    std::string s(static_cast<size_t>(q_), '0');
    for (int l = 1; l <= q_; ++l)
        if (get(l)) s[static_cast<size_t>(l - 1)] = '1';
    return s;
}

LevelVector shift_apply(const LevelVector& x, int gain, int q) {
    if (gain < 0) throw std::invalid_argument("channel gain must be >= 0");
    if (gain > q) throw std::invalid_argument("channel gain exceeds ambient level count");
    if (x.size() != q) throw std::invalid_argument("level vector dimension mismatch");
    LevelVector y(q);
    for (int k = 1; k <= gain; ++k) {
        if (x.get(k)) y.set(q - gain + k, 1);
    }
    return y;
}

LevelVector superpose(const std::vector<LevelVector>& vs, int q) {
    LevelVector acc(q);
    for (const LevelVector& v : vs) {
        if (v.size() != q) throw std::invalid_argument("level vector dimension mismatch");
        acc.xor_with(v);
    }
    return acc;
}

LevelVector receive(const std::vector<TransmitInput>& inputs, int q) {
    LevelVector acc(q);
    for (const TransmitInput& in : inputs) acc.xor_with(shift_apply(in.signal, in.gain, q));
    return acc;
}

}  // namespace detrelay
