#pragma once

#include "spinpaint/blind.hpp"
#include "spinpaint/error.hpp"
#include "spinpaint/image.hpp"
#include "spinpaint/masks.hpp"
#include "spinpaint/metrics.hpp"
#include "spinpaint/pocs.hpp"
#include "spinpaint/sparsity.hpp"
#include "spinpaint/transforms.hpp"
#include "spinpaint/tvrecon.hpp"
