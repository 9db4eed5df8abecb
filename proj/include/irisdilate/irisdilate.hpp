#pragma once

#include "irisdilate/bench.hpp"
#include "irisdilate/errors.hpp"
#include "irisdilate/geometry.hpp"
#include "irisdilate/image.hpp"
#include "irisdilate/metrics.hpp"
#include "irisdilate/pipeline.hpp"
#include "irisdilate/png_io.hpp"
#include "irisdilate/preview.hpp"
#include "irisdilate/remap.hpp"
#include "irisdilate/rubber_sheet.hpp"
#include "irisdilate/sampling.hpp"
#include "irisdilate/sidecar.hpp"
#include "irisdilate/synthetic.hpp"
