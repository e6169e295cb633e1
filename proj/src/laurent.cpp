#include "loopqkz/laurent.hpp"

namespace loopqkz {

template class MultiLaurent<BigRational>;
template class MultiLaurent<Cyclotomic6>;

}  // namespace loopqkz
