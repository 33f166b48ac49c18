#ifndef DOWKER_DOWKER_HPP
#define DOWKER_DOWKER_HPP

#include "io.hpp"

#endif
