#ifndef HOTELCODA_HOTELCODA_HPP
#define HOTELCODA_HOTELCODA_HPP

#include "coda.hpp"
#include "config.hpp"
#include "consistency.hpp"
#include "dataset.hpp"
#include "dataset_io.hpp"
#include "descriptive.hpp"
#include "design.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "model.hpp"
#include "ols.hpp"
#include "part_names.hpp"
#include "report.hpp"
#include "synth.hpp"

#endif
