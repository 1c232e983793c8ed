#pragma once

#include <string_view>
#include <vector>

#include "chaos/murec.hpp"

// Standard μ-recursive terms. The programs/ directory ships the same terms
// as text files.
namespace chaos::corpus {

/// add(x, 0) = x, add(x, y+1) = succ(add(x, y)).
RecFn addition();
/// mul(x, 0) = 0, mul(x, y+1) = add(mul(x, y), x).
RecFn multiplication();
/// pred(0) = 0, pred(y+1) = y.
RecFn predecessor();
/// monus(x, y) = max(x − y, 0).
RecFn truncated_subtraction();
/// sign(0) = 0, sign(y+1) = 1.
RecFn sign();

struct Entry {
    std::string_view file;  // name under programs/
    RecFn (*build)();
};

const std::vector<Entry>& entries();

}  // namespace chaos::corpus
