#ifndef MOTIVIC_MOTIVIC_HPP
#define MOTIVIC_MOTIVIC_HPP

#include <motivic/duality.hpp>
#include <motivic/errors.hpp>
#include <motivic/laurent.hpp>
#include <motivic/motivic_class.hpp>
#include <motivic/parser.hpp>
#include <motivic/registry.hpp>
#include <motivic/relative.hpp>
#include <motivic/scenario.hpp>
#include <motivic/variety.hpp>

#endif
