#include "chaos/corpus.hpp"

namespace chaos::corpus {

RecFn addition() {
    return RecFn::primrec(RecFn::proj(1, 1), RecFn::comp(RecFn::succ(), {RecFn::proj(3, 3)}));
}

RecFn multiplication() {
    return RecFn::primrec(RecFn::zero(1), RecFn::comp(addition(), {RecFn::proj(3, 3), RecFn::proj(3, 1)}));
}

RecFn predecessor() {
    return RecFn::primrec(RecFn::zero(0), RecFn::proj(2, 1));
}

RecFn truncated_subtraction() {
    return RecFn::primrec(RecFn::proj(1, 1), RecFn::comp(predecessor(), {RecFn::proj(3, 3)}));
}

RecFn sign() {
    return RecFn::primrec(RecFn::zero(0), RecFn::comp(RecFn::succ(), {RecFn::zero(2)}));
}

const std::vector<Entry>& entries() {
    static const std::vector<Entry> all{
        {"add.rec", &addition},
        {"mul.rec", &multiplication},
        {"pred.rec", &predecessor},
        {"monus.rec", &truncated_subtraction},
        {"sign.rec", &sign},
    };
    return all;
}

}  // namespace chaos::corpus
