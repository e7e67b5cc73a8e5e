#pragma once

#include <weylspectra/errors.hpp>
#include <weylspectra/signature.hpp>
#include <weylspectra/inner_product.hpp>
#include <weylspectra/rank.hpp>
#include <weylspectra/jet.hpp>
#include <weylspectra/jordan.hpp>
#include <weylspectra/tensor.hpp>
#include <weylspectra/builders.hpp>
#include <weylspectra/contractions.hpp>
#include <weylspectra/operators.hpp>
#include <weylspectra/tensor_io.hpp>
#include <weylspectra/polynomial.hpp>
#include <weylspectra/scalar_field.hpp>
#include <weylspectra/metric_field.hpp>
#include <weylspectra/families.hpp>
#include <weylspectra/point_frame.hpp>
#include <weylspectra/probe_config.hpp>
#include <weylspectra/sampling.hpp>
#include <weylspectra/probes.hpp>
#include <weylspectra/random_gen.hpp>
#include <weylspectra/report_json.hpp>
#include <weylspectra/theorems.hpp>
#include <weylspectra/explore.hpp>
