#pragma once

#include "loopqkz/ratfunc.hpp"

namespace loopqkz {

// Integer constants in the same ring as a reference value. Rational-function
// values carry their variable universe, so a plain T(v) is not enough.
template <class T>
T constant_like(const T&, long v)
{
    return T(v);
}

template <class C>
RatScalar<C> constant_like(const RatScalar<C>& like, long v)
{
    return RatScalar<C>::constant(like.universe(), C(v));
}

template <class C>
MultiLaurent<C> constant_like(const MultiLaurent<C>& like, long v)
{
    return MultiLaurent<C>::constant(like.universe(), C(v));
}

}  // namespace loopqkz
