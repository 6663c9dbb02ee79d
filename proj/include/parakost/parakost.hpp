#pragma once

#include "conjectures.hpp"
#include "fit.hpp"
#include "io.hpp"
#include "kostant.hpp"
#include "kostka.hpp"
#include "lr.hpp"
#include "qalg.hpp"
#include "qpoly.hpp"
#include "shapes.hpp"
#include "symfun.hpp"
