#pragma once

#include "etacong/arith.hpp"
#include "etacong/claim.hpp"
#include "etacong/etaq.hpp"
#include "etacong/generating_functions.hpp"
#include "etacong/hecke.hpp"
#include "etacong/oracle.hpp"
#include "etacong/radu.hpp"
#include "etacong/scan.hpp"
#include "etacong/series.hpp"
#include "etacong/series_io.hpp"
