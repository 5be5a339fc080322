#pragma once

#include "sidon_c4/certificate.hpp"
#include "sidon_c4/errors.hpp"
#include "sidon_c4/excision.hpp"
#include "sidon_c4/field.hpp"
#include "sidon_c4/graph.hpp"
#include "sidon_c4/number_theory.hpp"
#include "sidon_c4/oracle.hpp"
#include "sidon_c4/sidon.hpp"
