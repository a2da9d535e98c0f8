#ifndef HILBCAT_HILBCAT_HPP
#define HILBCAT_HILBCAT_HPP

#include <hilbcat/scalar.hpp>
#include <hilbcat/matrix.hpp>
#include <hilbcat/morphism.hpp>
#include <hilbcat/subobject.hpp>
#include <hilbcat/category.hpp>
#include <hilbcat/laws.hpp>
#include <hilbcat/random.hpp>
#include <hilbcat/dsl/model.hpp>
#include <hilbcat/dsl/formula.hpp>
#include <hilbcat/dsl/report.hpp>
#include <hilbcat/dsl/suite.hpp>

#endif  // HILBCAT_HILBCAT_HPP
