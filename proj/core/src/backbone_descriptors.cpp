#include "backbone_descriptors.hpp"

namespace fer::detail {

const std::string_view kVgg16Descriptor = R"fer({"n_layers":19,"total_params":14714688,"layers":[{"class":"InputLayer","name":"input_layer","inputs":[],"params":0},{"class":"Conv2D","name":"block1_conv1","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["input_layer"],"params":1792},{"class":"Conv2D","name":"block1_conv2","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block1_conv1"],"params":36928},{"class":"MaxPooling2D","name":"block1_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block1_conv2"],"params":0},{"class":"Conv2D","name":"block2_conv1","filters":128,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block1_pool"],"params":73856},{"class":"Conv2D","name":"block2_conv2","filters":128,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block2_conv1"],"params":147584},{"class":"MaxPooling2D","name":"block2_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block2_conv2"],"params":0},{"class":"Conv2D","name":"block3_conv1","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block2_pool"],"params":295168},{"class":"Conv2D","name":"block3_conv2","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block3_conv1"],"params":590080},{"class":"Conv2D","name":"block3_conv3","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block3_conv2"],"params":590080},{"class":"MaxPooling2D","name":"block3_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block3_conv3"],"params":0},{"class":"Conv2D","name":"block4_conv1","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block3_pool"],"params":1180160},{"class":"Conv2D","name":"block4_conv2","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block4_conv1"],"params":2359808},{"class":"Conv2D","name":"block4_conv3","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block4_conv2"],"params":2359808},{"class":"MaxPooling2D","name":"block4_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block4_conv3"],"params":0},{"class":"Conv2D","name":"block5_conv1","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block4_pool"],"params":2359808},{"class":"Conv2D","name":"block5_conv2","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block5_conv1"],"params":2359808},{"class":"Conv2D","name":"block5_conv3","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block5_conv2"],"params":2359808},{"class":"MaxPooling2D","name":"block5_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block5_conv3"],"params":0}]})fer";

const std::string_view kVgg19Descriptor = R"fer({"n_layers":22,"total_params":20024384,"layers":[{"class":"InputLayer","name":"input_layer","inputs":[],"params":0},{"class":"Conv2D","name":"block1_conv1","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["input_layer"],"params":1792},{"class":"Conv2D","name":"block1_conv2","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block1_conv1"],"params":36928},{"class":"MaxPooling2D","name":"block1_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block1_conv2"],"params":0},{"class":"Conv2D","name":"block2_conv1","filters":128,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block1_pool"],"params":73856},{"class":"Conv2D","name":"block2_conv2","filters":128,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block2_conv1"],"params":147584},{"class":"MaxPooling2D","name":"block2_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block2_conv2"],"params":0},{"class":"Conv2D","name":"block3_conv1","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block2_pool"],"params":295168},{"class":"Conv2D","name":"block3_conv2","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block3_conv1"],"params":590080},{"class":"Conv2D","name":"block3_conv3","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block3_conv2"],"params":590080},{"class":"Conv2D","name":"block3_conv4","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block3_conv3"],"params":590080},{"class":"MaxPooling2D","name":"block3_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block3_conv4"],"params":0},{"class":"Conv2D","name":"block4_conv1","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block3_pool"],"params":1180160},{"class":"Conv2D","name":"block4_conv2","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block4_conv1"],"params":2359808},{"class":"Conv2D","name":"block4_conv3","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block4_conv2"],"params":2359808},{"class":"Conv2D","name":"block4_conv4","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block4_conv3"],"params":2359808},{"class":"MaxPooling2D","name":"block4_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block4_conv4"],"params":0},{"class":"Conv2D","name":"block5_conv1","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block4_pool"],"params":2359808},{"class":"Conv2D","name":"block5_conv2","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block5_conv1"],"params":2359808},{"class":"Conv2D","name":"block5_conv3","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block5_conv2"],"params":2359808},{"class":"Conv2D","name":"block5_conv4","filters":512,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":true,"activation":"relu","inputs":["block5_conv3"],"params":2359808},{"class":"MaxPooling2D","name":"block5_pool","strides":[2,2],"padding":"valid","pool_size":[2,2],"inputs":["block5_conv4"],"params":0}]})fer";

const std::string_view kInceptionV3Descriptor = R"fer({"n_layers":311,"total_params":21802784,"layers":[{"class":"InputLayer","name":"input_layer","inputs":[],"params":0},{"class":"Conv2D","name":"conv2d","filters":32,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["input_layer"],"params":864},{"class":"BatchNormalization","name":"batch_normalization","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d"],"params":96},{"class":"Activation","name":"activation","activation":"relu","inputs":["batch_normalization"],"params":0},{"class":"Conv2D","name":"conv2d_1","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation"],"params":9216},{"class":"BatchNormalization","name":"batch_normalization_1","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_1"],"params":96},{"class":"Activation","name":"activation_1","activation":"relu","inputs":["batch_normalization_1"],"params":0},{"class":"Conv2D","name":"conv2d_2","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_1"],"params":18432},{"class":"BatchNormalization","name":"batch_normalization_2","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_2"],"params":192},{"class":"Activation","name":"activation_2","activation":"relu","inputs":["batch_normalization_2"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["activation_2"],"params":0},{"class":"Conv2D","name":"conv2d_3","filters":80,"kernel_size":[1,1],"strides":[1,1],"padding":"valid","use_bias":false,"activation":"linear","inputs":["max_pooling2d"],"params":5120},{"class":"BatchNormalization","name":"batch_normalization_3","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_3"],"params":240},{"class":"Activation","name":"activation_3","activation":"relu","inputs":["batch_normalization_3"],"params":0},{"class":"Conv2D","name":"conv2d_4","filters":192,"kernel_size":[3,3],"strides":[1,1],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_3"],"params":138240},{"class":"BatchNormalization","name":"batch_normalization_4","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_4"],"params":576},{"class":"Activation","name":"activation_4","activation":"relu","inputs":["batch_normalization_4"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d_1","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["activation_4"],"params":0},{"class":"Conv2D","name":"conv2d_8","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["max_pooling2d_1"],"params":12288},{"class":"BatchNormalization","name":"batch_normalization_8","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_8"],"params":192},{"class":"Activation","name":"activation_8","activation":"relu","inputs":["batch_normalization_8"],"params":0},{"class":"Conv2D","name":"conv2d_6","filters":48,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["max_pooling2d_1"],"params":9216},{"class":"Conv2D","name":"conv2d_9","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_8"],"params":55296},{"class":"BatchNormalization","name":"batch_normalization_6","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_6"],"params":144},{"class":"BatchNormalization","name":"batch_normalization_9","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_9"],"params":288},{"class":"Activation","name":"activation_6","activation":"relu","inputs":["batch_normalization_6"],"params":0},{"class":"Activation","name":"activation_9","activation":"relu","inputs":["batch_normalization_9"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["max_pooling2d_1"],"params":0},{"class":"Conv2D","name":"conv2d_5","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["max_pooling2d_1"],"params":12288},{"class":"Conv2D","name":"conv2d_7","filters":64,"kernel_size":[5,5],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_6"],"params":76800},{"class":"Conv2D","name":"conv2d_10","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_9"],"params":82944},{"class":"Conv2D","name":"conv2d_11","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d"],"params":6144},{"class":"BatchNormalization","name":"batch_normalization_5","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_5"],"params":192},{"class":"BatchNormalization","name":"batch_normalization_7","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_7"],"params":192},{"class":"BatchNormalization","name":"batch_normalization_10","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_10"],"params":288},{"class":"BatchNormalization","name":"batch_normalization_11","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_11"],"params":96},{"class":"Activation","name":"activation_5","activation":"relu","inputs":["batch_normalization_5"],"params":0},{"class":"Activation","name":"activation_7","activation":"relu","inputs":["batch_normalization_7"],"params":0},{"class":"Activation","name":"activation_10","activation":"relu","inputs":["batch_normalization_10"],"params":0},{"class":"Activation","name":"activation_11","activation":"relu","inputs":["batch_normalization_11"],"params":0},{"class":"Concatenate","name":"mixed0","axis":3,"inputs":["activation_5","activation_7","activation_10","activation_11"],"params":0},{"class":"Conv2D","name":"conv2d_15","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed0"],"params":16384},{"class":"BatchNormalization","name":"batch_normalization_15","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_15"],"params":192},{"class":"Activation","name":"activation_15","activation":"relu","inputs":["batch_normalization_15"],"params":0},{"class":"Conv2D","name":"conv2d_13","filters":48,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed0"],"params":12288},{"class":"Conv2D","name":"conv2d_16","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_15"],"params":55296},{"class":"BatchNormalization","name":"batch_normalization_13","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_13"],"params":144},{"class":"BatchNormalization","name":"batch_normalization_16","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_16"],"params":288},{"class":"Activation","name":"activation_13","activation":"relu","inputs":["batch_normalization_13"],"params":0},{"class":"Activation","name":"activation_16","activation":"relu","inputs":["batch_normalization_16"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d_1","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed0"],"params":0},{"class":"Conv2D","name":"conv2d_12","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed0"],"params":16384},{"class":"Conv2D","name":"conv2d_14","filters":64,"kernel_size":[5,5],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_13"],"params":76800},{"class":"Conv2D","name":"conv2d_17","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_16"],"params":82944},{"class":"Conv2D","name":"conv2d_18","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_1"],"params":16384},{"class":"BatchNormalization","name":"batch_normalization_12","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_12"],"params":192},{"class":"BatchNormalization","name":"batch_normalization_14","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_14"],"params":192},{"class":"BatchNormalization","name":"batch_normalization_17","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_17"],"params":288},{"class":"BatchNormalization","name":"batch_normalization_18","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_18"],"params":192},{"class":"Activation","name":"activation_12","activation":"relu","inputs":["batch_normalization_12"],"params":0},{"class":"Activation","name":"activation_14","activation":"relu","inputs":["batch_normalization_14"],"params":0},{"class":"Activation","name":"activation_17","activation":"relu","inputs":["batch_normalization_17"],"params":0},{"class":"Activation","name":"activation_18","activation":"relu","inputs":["batch_normalization_18"],"params":0},{"class":"Concatenate","name":"mixed1","axis":3,"inputs":["activation_12","activation_14","activation_17","activation_18"],"params":0},{"class":"Conv2D","name":"conv2d_22","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed1"],"params":18432},{"class":"BatchNormalization","name":"batch_normalization_22","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_22"],"params":192},{"class":"Activation","name":"activation_22","activation":"relu","inputs":["batch_normalization_22"],"params":0},{"class":"Conv2D","name":"conv2d_20","filters":48,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed1"],"params":13824},{"class":"Conv2D","name":"conv2d_23","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_22"],"params":55296},{"class":"BatchNormalization","name":"batch_normalization_20","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_20"],"params":144},{"class":"BatchNormalization","name":"batch_normalization_23","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_23"],"params":288},{"class":"Activation","name":"activation_20","activation":"relu","inputs":["batch_normalization_20"],"params":0},{"class":"Activation","name":"activation_23","activation":"relu","inputs":["batch_normalization_23"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d_2","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed1"],"params":0},{"class":"Conv2D","name":"conv2d_19","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed1"],"params":18432},{"class":"Conv2D","name":"conv2d_21","filters":64,"kernel_size":[5,5],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_20"],"params":76800},{"class":"Conv2D","name":"conv2d_24","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_23"],"params":82944},{"class":"Conv2D","name":"conv2d_25","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_2"],"params":18432},{"class":"BatchNormalization","name":"batch_normalization_19","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_19"],"params":192},{"class":"BatchNormalization","name":"batch_normalization_21","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_21"],"params":192},{"class":"BatchNormalization","name":"batch_normalization_24","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_24"],"params":288},{"class":"BatchNormalization","name":"batch_normalization_25","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_25"],"params":192},{"class":"Activation","name":"activation_19","activation":"relu","inputs":["batch_normalization_19"],"params":0},{"class":"Activation","name":"activation_21","activation":"relu","inputs":["batch_normalization_21"],"params":0},{"class":"Activation","name":"activation_24","activation":"relu","inputs":["batch_normalization_24"],"params":0},{"class":"Activation","name":"activation_25","activation":"relu","inputs":["batch_normalization_25"],"params":0},{"class":"Concatenate","name":"mixed2","axis":3,"inputs":["activation_19","activation_21","activation_24","activation_25"],"params":0},{"class":"Conv2D","name":"conv2d_27","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed2"],"params":18432},{"class":"BatchNormalization","name":"batch_normalization_27","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_27"],"params":192},{"class":"Activation","name":"activation_27","activation":"relu","inputs":["batch_normalization_27"],"params":0},{"class":"Conv2D","name":"conv2d_28","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_27"],"params":55296},{"class":"BatchNormalization","name":"batch_normalization_28","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_28"],"params":288},{"class":"Activation","name":"activation_28","activation":"relu","inputs":["batch_normalization_28"],"params":0},{"class":"Conv2D","name":"conv2d_26","filters":384,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["mixed2"],"params":995328},{"class":"Conv2D","name":"conv2d_29","filters":96,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_28"],"params":82944},{"class":"BatchNormalization","name":"batch_normalization_26","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_26"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_29","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_29"],"params":288},{"class":"Activation","name":"activation_26","activation":"relu","inputs":["batch_normalization_26"],"params":0},{"class":"Activation","name":"activation_29","activation":"relu","inputs":["batch_normalization_29"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d_2","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["mixed2"],"params":0},{"class":"Concatenate","name":"mixed3","axis":3,"inputs":["activation_26","activation_29","max_pooling2d_2"],"params":0},{"class":"Conv2D","name":"conv2d_34","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed3"],"params":98304},{"class":"BatchNormalization","name":"batch_normalization_34","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_34"],"params":384},{"class":"Activation","name":"activation_34","activation":"relu","inputs":["batch_normalization_34"],"params":0},{"class":"Conv2D","name":"conv2d_35","filters":128,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_34"],"params":114688},{"class":"BatchNormalization","name":"batch_normalization_35","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_35"],"params":384},{"class":"Activation","name":"activation_35","activation":"relu","inputs":["batch_normalization_35"],"params":0},{"class":"Conv2D","name":"conv2d_31","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed3"],"params":98304},{"class":"Conv2D","name":"conv2d_36","filters":128,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_35"],"params":114688},{"class":"BatchNormalization","name":"batch_normalization_31","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_31"],"params":384},{"class":"BatchNormalization","name":"batch_normalization_36","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_36"],"params":384},{"class":"Activation","name":"activation_31","activation":"relu","inputs":["batch_normalization_31"],"params":0},{"class":"Activation","name":"activation_36","activation":"relu","inputs":["batch_normalization_36"],"params":0},{"class":"Conv2D","name":"conv2d_32","filters":128,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_31"],"params":114688},{"class":"Conv2D","name":"conv2d_37","filters":128,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_36"],"params":114688},{"class":"BatchNormalization","name":"batch_normalization_32","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_32"],"params":384},{"class":"BatchNormalization","name":"batch_normalization_37","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_37"],"params":384},{"class":"Activation","name":"activation_32","activation":"relu","inputs":["batch_normalization_32"],"params":0},{"class":"Activation","name":"activation_37","activation":"relu","inputs":["batch_normalization_37"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d_3","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed3"],"params":0},{"class":"Conv2D","name":"conv2d_30","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed3"],"params":147456},{"class":"Conv2D","name":"conv2d_33","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_32"],"params":172032},{"class":"Conv2D","name":"conv2d_38","filters":192,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_37"],"params":172032},{"class":"Conv2D","name":"conv2d_39","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_3"],"params":147456},{"class":"BatchNormalization","name":"batch_normalization_30","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_30"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_33","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_33"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_38","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_38"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_39","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_39"],"params":576},{"class":"Activation","name":"activation_30","activation":"relu","inputs":["batch_normalization_30"],"params":0},{"class":"Activation","name":"activation_33","activation":"relu","inputs":["batch_normalization_33"],"params":0},{"class":"Activation","name":"activation_38","activation":"relu","inputs":["batch_normalization_38"],"params":0},{"class":"Activation","name":"activation_39","activation":"relu","inputs":["batch_normalization_39"],"params":0},{"class":"Concatenate","name":"mixed4","axis":3,"inputs":["activation_30","activation_33","activation_38","activation_39"],"params":0},{"class":"Conv2D","name":"conv2d_44","filters":160,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed4"],"params":122880},{"class":"BatchNormalization","name":"batch_normalization_44","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_44"],"params":480},{"class":"Activation","name":"activation_44","activation":"relu","inputs":["batch_normalization_44"],"params":0},{"class":"Conv2D","name":"conv2d_45","filters":160,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_44"],"params":179200},{"class":"BatchNormalization","name":"batch_normalization_45","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_45"],"params":480},{"class":"Activation","name":"activation_45","activation":"relu","inputs":["batch_normalization_45"],"params":0},{"class":"Conv2D","name":"conv2d_41","filters":160,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed4"],"params":122880},{"class":"Conv2D","name":"conv2d_46","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_45"],"params":179200},{"class":"BatchNormalization","name":"batch_normalization_41","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_41"],"params":480},{"class":"BatchNormalization","name":"batch_normalization_46","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_46"],"params":480},{"class":"Activation","name":"activation_41","activation":"relu","inputs":["batch_normalization_41"],"params":0},{"class":"Activation","name":"activation_46","activation":"relu","inputs":["batch_normalization_46"],"params":0},{"class":"Conv2D","name":"conv2d_42","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_41"],"params":179200},{"class":"Conv2D","name":"conv2d_47","filters":160,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_46"],"params":179200},{"class":"BatchNormalization","name":"batch_normalization_42","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_42"],"params":480},{"class":"BatchNormalization","name":"batch_normalization_47","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_47"],"params":480},{"class":"Activation","name":"activation_42","activation":"relu","inputs":["batch_normalization_42"],"params":0},{"class":"Activation","name":"activation_47","activation":"relu","inputs":["batch_normalization_47"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d_4","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed4"],"params":0},{"class":"Conv2D","name":"conv2d_40","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed4"],"params":147456},{"class":"Conv2D","name":"conv2d_43","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_42"],"params":215040},{"class":"Conv2D","name":"conv2d_48","filters":192,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_47"],"params":215040},{"class":"Conv2D","name":"conv2d_49","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_4"],"params":147456},{"class":"BatchNormalization","name":"batch_normalization_40","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_40"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_43","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_43"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_48","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_48"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_49","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_49"],"params":576},{"class":"Activation","name":"activation_40","activation":"relu","inputs":["batch_normalization_40"],"params":0},{"class":"Activation","name":"activation_43","activation":"relu","inputs":["batch_normalization_43"],"params":0},{"class":"Activation","name":"activation_48","activation":"relu","inputs":["batch_normalization_48"],"params":0},{"class":"Activation","name":"activation_49","activation":"relu","inputs":["batch_normalization_49"],"params":0},{"class":"Concatenate","name":"mixed5","axis":3,"inputs":["activation_40","activation_43","activation_48","activation_49"],"params":0},{"class":"Conv2D","name":"conv2d_54","filters":160,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed5"],"params":122880},{"class":"BatchNormalization","name":"batch_normalization_54","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_54"],"params":480},{"class":"Activation","name":"activation_54","activation":"relu","inputs":["batch_normalization_54"],"params":0},{"class":"Conv2D","name":"conv2d_55","filters":160,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_54"],"params":179200},{"class":"BatchNormalization","name":"batch_normalization_55","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_55"],"params":480},{"class":"Activation","name":"activation_55","activation":"relu","inputs":["batch_normalization_55"],"params":0},{"class":"Conv2D","name":"conv2d_51","filters":160,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed5"],"params":122880},{"class":"Conv2D","name":"conv2d_56","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_55"],"params":179200},{"class":"BatchNormalization","name":"batch_normalization_51","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_51"],"params":480},{"class":"BatchNormalization","name":"batch_normalization_56","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_56"],"params":480},{"class":"Activation","name":"activation_51","activation":"relu","inputs":["batch_normalization_51"],"params":0},{"class":"Activation","name":"activation_56","activation":"relu","inputs":["batch_normalization_56"],"params":0},{"class":"Conv2D","name":"conv2d_52","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_51"],"params":179200},{"class":"Conv2D","name":"conv2d_57","filters":160,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_56"],"params":179200},{"class":"BatchNormalization","name":"batch_normalization_52","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_52"],"params":480},{"class":"BatchNormalization","name":"batch_normalization_57","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_57"],"params":480},{"class":"Activation","name":"activation_52","activation":"relu","inputs":["batch_normalization_52"],"params":0},{"class":"Activation","name":"activation_57","activation":"relu","inputs":["batch_normalization_57"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d_5","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed5"],"params":0},{"class":"Conv2D","name":"conv2d_50","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed5"],"params":147456},{"class":"Conv2D","name":"conv2d_53","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_52"],"params":215040},{"class":"Conv2D","name":"conv2d_58","filters":192,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_57"],"params":215040},{"class":"Conv2D","name":"conv2d_59","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_5"],"params":147456},{"class":"BatchNormalization","name":"batch_normalization_50","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_50"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_53","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_53"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_58","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_58"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_59","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_59"],"params":576},{"class":"Activation","name":"activation_50","activation":"relu","inputs":["batch_normalization_50"],"params":0},{"class":"Activation","name":"activation_53","activation":"relu","inputs":["batch_normalization_53"],"params":0},{"class":"Activation","name":"activation_58","activation":"relu","inputs":["batch_normalization_58"],"params":0},{"class":"Activation","name":"activation_59","activation":"relu","inputs":["batch_normalization_59"],"params":0},{"class":"Concatenate","name":"mixed6","axis":3,"inputs":["activation_50","activation_53","activation_58","activation_59"],"params":0},{"class":"Conv2D","name":"conv2d_64","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed6"],"params":147456},{"class":"BatchNormalization","name":"batch_normalization_64","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_64"],"params":576},{"class":"Activation","name":"activation_64","activation":"relu","inputs":["batch_normalization_64"],"params":0},{"class":"Conv2D","name":"conv2d_65","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_64"],"params":258048},{"class":"BatchNormalization","name":"batch_normalization_65","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_65"],"params":576},{"class":"Activation","name":"activation_65","activation":"relu","inputs":["batch_normalization_65"],"params":0},{"class":"Conv2D","name":"conv2d_61","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed6"],"params":147456},{"class":"Conv2D","name":"conv2d_66","filters":192,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_65"],"params":258048},{"class":"BatchNormalization","name":"batch_normalization_61","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_61"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_66","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_66"],"params":576},{"class":"Activation","name":"activation_61","activation":"relu","inputs":["batch_normalization_61"],"params":0},{"class":"Activation","name":"activation_66","activation":"relu","inputs":["batch_normalization_66"],"params":0},{"class":"Conv2D","name":"conv2d_62","filters":192,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_61"],"params":258048},{"class":"Conv2D","name":"conv2d_67","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_66"],"params":258048},{"class":"BatchNormalization","name":"batch_normalization_62","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_62"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_67","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_67"],"params":576},{"class":"Activation","name":"activation_62","activation":"relu","inputs":["batch_normalization_62"],"params":0},{"class":"Activation","name":"activation_67","activation":"relu","inputs":["batch_normalization_67"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d_6","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed6"],"params":0},{"class":"Conv2D","name":"conv2d_60","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed6"],"params":147456},{"class":"Conv2D","name":"conv2d_63","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_62"],"params":258048},{"class":"Conv2D","name":"conv2d_68","filters":192,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_67"],"params":258048},{"class":"Conv2D","name":"conv2d_69","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_6"],"params":147456},{"class":"BatchNormalization","name":"batch_normalization_60","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_60"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_63","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_63"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_68","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_68"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_69","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_69"],"params":576},{"class":"Activation","name":"activation_60","activation":"relu","inputs":["batch_normalization_60"],"params":0},{"class":"Activation","name":"activation_63","activation":"relu","inputs":["batch_normalization_63"],"params":0},{"class":"Activation","name":"activation_68","activation":"relu","inputs":["batch_normalization_68"],"params":0},{"class":"Activation","name":"activation_69","activation":"relu","inputs":["batch_normalization_69"],"params":0},{"class":"Concatenate","name":"mixed7","axis":3,"inputs":["activation_60","activation_63","activation_68","activation_69"],"params":0},{"class":"Conv2D","name":"conv2d_72","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed7"],"params":147456},{"class":"BatchNormalization","name":"batch_normalization_72","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_72"],"params":576},{"class":"Activation","name":"activation_72","activation":"relu","inputs":["batch_normalization_72"],"params":0},{"class":"Conv2D","name":"conv2d_73","filters":192,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_72"],"params":258048},{"class":"BatchNormalization","name":"batch_normalization_73","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_73"],"params":576},{"class":"Activation","name":"activation_73","activation":"relu","inputs":["batch_normalization_73"],"params":0},{"class":"Conv2D","name":"conv2d_70","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed7"],"params":147456},{"class":"Conv2D","name":"conv2d_74","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_73"],"params":258048},{"class":"BatchNormalization","name":"batch_normalization_70","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_70"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_74","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_74"],"params":576},{"class":"Activation","name":"activation_70","activation":"relu","inputs":["batch_normalization_70"],"params":0},{"class":"Activation","name":"activation_74","activation":"relu","inputs":["batch_normalization_74"],"params":0},{"class":"Conv2D","name":"conv2d_71","filters":320,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_70"],"params":552960},{"class":"Conv2D","name":"conv2d_75","filters":192,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_74"],"params":331776},{"class":"BatchNormalization","name":"batch_normalization_71","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_71"],"params":960},{"class":"BatchNormalization","name":"batch_normalization_75","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_75"],"params":576},{"class":"Activation","name":"activation_71","activation":"relu","inputs":["batch_normalization_71"],"params":0},{"class":"Activation","name":"activation_75","activation":"relu","inputs":["batch_normalization_75"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d_3","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["mixed7"],"params":0},{"class":"Concatenate","name":"mixed8","axis":3,"inputs":["activation_71","activation_75","max_pooling2d_3"],"params":0},{"class":"Conv2D","name":"conv2d_80","filters":448,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed8"],"params":573440},{"class":"BatchNormalization","name":"batch_normalization_80","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_80"],"params":1344},{"class":"Activation","name":"activation_80","activation":"relu","inputs":["batch_normalization_80"],"params":0},{"class":"Conv2D","name":"conv2d_77","filters":384,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed8"],"params":491520},{"class":"Conv2D","name":"conv2d_81","filters":384,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_80"],"params":1548288},{"class":"BatchNormalization","name":"batch_normalization_77","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_77"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_81","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_81"],"params":1152},{"class":"Activation","name":"activation_77","activation":"relu","inputs":["batch_normalization_77"],"params":0},{"class":"Activation","name":"activation_81","activation":"relu","inputs":["batch_normalization_81"],"params":0},{"class":"Conv2D","name":"conv2d_78","filters":384,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_77"],"params":442368},{"class":"Conv2D","name":"conv2d_79","filters":384,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_77"],"params":442368},{"class":"Conv2D","name":"conv2d_82","filters":384,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_81"],"params":442368},{"class":"Conv2D","name":"conv2d_83","filters":384,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_81"],"params":442368},{"class":"AveragePooling2D","name":"average_pooling2d_7","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed8"],"params":0},{"class":"Conv2D","name":"conv2d_76","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed8"],"params":409600},{"class":"BatchNormalization","name":"batch_normalization_78","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_78"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_79","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_79"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_82","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_82"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_83","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_83"],"params":1152},{"class":"Conv2D","name":"conv2d_84","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_7"],"params":245760},{"class":"BatchNormalization","name":"batch_normalization_76","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_76"],"params":960},{"class":"Activation","name":"activation_78","activation":"relu","inputs":["batch_normalization_78"],"params":0},{"class":"Activation","name":"activation_79","activation":"relu","inputs":["batch_normalization_79"],"params":0},{"class":"Activation","name":"activation_82","activation":"relu","inputs":["batch_normalization_82"],"params":0},{"class":"Activation","name":"activation_83","activation":"relu","inputs":["batch_normalization_83"],"params":0},{"class":"BatchNormalization","name":"batch_normalization_84","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_84"],"params":576},{"class":"Activation","name":"activation_76","activation":"relu","inputs":["batch_normalization_76"],"params":0},{"class":"Concatenate","name":"mixed9_0","axis":3,"inputs":["activation_78","activation_79"],"params":0},{"class":"Concatenate","name":"concatenate","axis":3,"inputs":["activation_82","activation_83"],"params":0},{"class":"Activation","name":"activation_84","activation":"relu","inputs":["batch_normalization_84"],"params":0},{"class":"Concatenate","name":"mixed9","axis":3,"inputs":["activation_76","mixed9_0","concatenate","activation_84"],"params":0},{"class":"Conv2D","name":"conv2d_89","filters":448,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed9"],"params":917504},{"class":"BatchNormalization","name":"batch_normalization_89","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_89"],"params":1344},{"class":"Activation","name":"activation_89","activation":"relu","inputs":["batch_normalization_89"],"params":0},{"class":"Conv2D","name":"conv2d_86","filters":384,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed9"],"params":786432},{"class":"Conv2D","name":"conv2d_90","filters":384,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_89"],"params":1548288},{"class":"BatchNormalization","name":"batch_normalization_86","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_86"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_90","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_90"],"params":1152},{"class":"Activation","name":"activation_86","activation":"relu","inputs":["batch_normalization_86"],"params":0},{"class":"Activation","name":"activation_90","activation":"relu","inputs":["batch_normalization_90"],"params":0},{"class":"Conv2D","name":"conv2d_87","filters":384,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_86"],"params":442368},{"class":"Conv2D","name":"conv2d_88","filters":384,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_86"],"params":442368},{"class":"Conv2D","name":"conv2d_91","filters":384,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_90"],"params":442368},{"class":"Conv2D","name":"conv2d_92","filters":384,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_90"],"params":442368},{"class":"AveragePooling2D","name":"average_pooling2d_8","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["mixed9"],"params":0},{"class":"Conv2D","name":"conv2d_85","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed9"],"params":655360},{"class":"BatchNormalization","name":"batch_normalization_87","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_87"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_88","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_88"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_91","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_91"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_92","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_92"],"params":1152},{"class":"Conv2D","name":"conv2d_93","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d_8"],"params":393216},{"class":"BatchNormalization","name":"batch_normalization_85","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_85"],"params":960},{"class":"Activation","name":"activation_87","activation":"relu","inputs":["batch_normalization_87"],"params":0},{"class":"Activation","name":"activation_88","activation":"relu","inputs":["batch_normalization_88"],"params":0},{"class":"Activation","name":"activation_91","activation":"relu","inputs":["batch_normalization_91"],"params":0},{"class":"Activation","name":"activation_92","activation":"relu","inputs":["batch_normalization_92"],"params":0},{"class":"BatchNormalization","name":"batch_normalization_93","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_93"],"params":576},{"class":"Activation","name":"activation_85","activation":"relu","inputs":["batch_normalization_85"],"params":0},{"class":"Concatenate","name":"mixed9_1","axis":3,"inputs":["activation_87","activation_88"],"params":0},{"class":"Concatenate","name":"concatenate_1","axis":3,"inputs":["activation_91","activation_92"],"params":0},{"class":"Activation","name":"activation_93","activation":"relu","inputs":["batch_normalization_93"],"params":0},{"class":"Concatenate","name":"mixed10","axis":3,"inputs":["activation_85","mixed9_1","concatenate_1","activation_93"],"params":0}]})fer";

const std::string_view kInceptionResnetV2Descriptor = R"fer({"n_layers":780,"total_params":54336736,"layers":[{"class":"InputLayer","name":"input_layer","inputs":[],"params":0},{"class":"Conv2D","name":"conv2d","filters":32,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["input_layer"],"params":864},{"class":"BatchNormalization","name":"batch_normalization","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d"],"params":96},{"class":"Activation","name":"activation","activation":"relu","inputs":["batch_normalization"],"params":0},{"class":"Conv2D","name":"conv2d_1","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation"],"params":9216},{"class":"BatchNormalization","name":"batch_normalization_1","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_1"],"params":96},{"class":"Activation","name":"activation_1","activation":"relu","inputs":["batch_normalization_1"],"params":0},{"class":"Conv2D","name":"conv2d_2","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_1"],"params":18432},{"class":"BatchNormalization","name":"batch_normalization_2","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_2"],"params":192},{"class":"Activation","name":"activation_2","activation":"relu","inputs":["batch_normalization_2"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["activation_2"],"params":0},{"class":"Conv2D","name":"conv2d_3","filters":80,"kernel_size":[1,1],"strides":[1,1],"padding":"valid","use_bias":false,"activation":"linear","inputs":["max_pooling2d"],"params":5120},{"class":"BatchNormalization","name":"batch_normalization_3","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_3"],"params":240},{"class":"Activation","name":"activation_3","activation":"relu","inputs":["batch_normalization_3"],"params":0},{"class":"Conv2D","name":"conv2d_4","filters":192,"kernel_size":[3,3],"strides":[1,1],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_3"],"params":138240},{"class":"BatchNormalization","name":"batch_normalization_4","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_4"],"params":576},{"class":"Activation","name":"activation_4","activation":"relu","inputs":["batch_normalization_4"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d_1","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["activation_4"],"params":0},{"class":"Conv2D","name":"conv2d_8","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["max_pooling2d_1"],"params":12288},{"class":"BatchNormalization","name":"batch_normalization_8","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_8"],"params":192},{"class":"Activation","name":"activation_8","activation":"relu","inputs":["batch_normalization_8"],"params":0},{"class":"Conv2D","name":"conv2d_6","filters":48,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["max_pooling2d_1"],"params":9216},{"class":"Conv2D","name":"conv2d_9","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_8"],"params":55296},{"class":"BatchNormalization","name":"batch_normalization_6","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_6"],"params":144},{"class":"BatchNormalization","name":"batch_normalization_9","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_9"],"params":288},{"class":"Activation","name":"activation_6","activation":"relu","inputs":["batch_normalization_6"],"params":0},{"class":"Activation","name":"activation_9","activation":"relu","inputs":["batch_normalization_9"],"params":0},{"class":"AveragePooling2D","name":"average_pooling2d","strides":[1,1],"padding":"same","pool_size":[3,3],"inputs":["max_pooling2d_1"],"params":0},{"class":"Conv2D","name":"conv2d_5","filters":96,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["max_pooling2d_1"],"params":18432},{"class":"Conv2D","name":"conv2d_7","filters":64,"kernel_size":[5,5],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_6"],"params":76800},{"class":"Conv2D","name":"conv2d_10","filters":96,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_9"],"params":82944},{"class":"Conv2D","name":"conv2d_11","filters":64,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["average_pooling2d"],"params":12288},{"class":"BatchNormalization","name":"batch_normalization_5","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_5"],"params":288},{"class":"BatchNormalization","name":"batch_normalization_7","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_7"],"params":192},{"class":"BatchNormalization","name":"batch_normalization_10","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_10"],"params":288},{"class":"BatchNormalization","name":"batch_normalization_11","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_11"],"params":192},{"class":"Activation","name":"activation_5","activation":"relu","inputs":["batch_normalization_5"],"params":0},{"class":"Activation","name":"activation_7","activation":"relu","inputs":["batch_normalization_7"],"params":0},{"class":"Activation","name":"activation_10","activation":"relu","inputs":["batch_normalization_10"],"params":0},{"class":"Activation","name":"activation_11","activation":"relu","inputs":["batch_normalization_11"],"params":0},{"class":"Concatenate","name":"mixed_5b","axis":3,"inputs":["activation_5","activation_7","activation_10","activation_11"],"params":0},{"class":"Conv2D","name":"conv2d_15","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed_5b"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_15","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_15"],"params":96},{"class":"Activation","name":"activation_15","activation":"relu","inputs":["batch_normalization_15"],"params":0},{"class":"Conv2D","name":"conv2d_13","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed_5b"],"params":10240},{"class":"Conv2D","name":"conv2d_16","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_15"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_13","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_13"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_16","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_16"],"params":144},{"class":"Activation","name":"activation_13","activation":"relu","inputs":["batch_normalization_13"],"params":0},{"class":"Activation","name":"activation_16","activation":"relu","inputs":["batch_normalization_16"],"params":0},{"class":"Conv2D","name":"conv2d_12","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed_5b"],"params":10240},{"class":"Conv2D","name":"conv2d_14","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_13"],"params":9216},{"class":"Conv2D","name":"conv2d_17","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_16"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_12","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_12"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_14","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_14"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_17","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_17"],"params":192},{"class":"Activation","name":"activation_12","activation":"relu","inputs":["batch_normalization_12"],"params":0},{"class":"Activation","name":"activation_14","activation":"relu","inputs":["batch_normalization_14"],"params":0},{"class":"Activation","name":"activation_17","activation":"relu","inputs":["batch_normalization_17"],"params":0},{"class":"Concatenate","name":"block35_1_mixed","axis":3,"inputs":["activation_12","activation_14","activation_17"],"params":0},{"class":"Conv2D","name":"block35_1_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_1_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer","scale":0.17,"inputs":["mixed_5b","block35_1_conv"],"params":0},{"class":"Activation","name":"block35_1_ac","activation":"relu","inputs":["custom_scale_layer"],"params":0},{"class":"Conv2D","name":"conv2d_21","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_1_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_21","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_21"],"params":96},{"class":"Activation","name":"activation_21","activation":"relu","inputs":["batch_normalization_21"],"params":0},{"class":"Conv2D","name":"conv2d_19","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_1_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_22","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_21"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_19","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_19"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_22","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_22"],"params":144},{"class":"Activation","name":"activation_19","activation":"relu","inputs":["batch_normalization_19"],"params":0},{"class":"Activation","name":"activation_22","activation":"relu","inputs":["batch_normalization_22"],"params":0},{"class":"Conv2D","name":"conv2d_18","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_1_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_20","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_19"],"params":9216},{"class":"Conv2D","name":"conv2d_23","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_22"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_18","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_18"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_20","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_20"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_23","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_23"],"params":192},{"class":"Activation","name":"activation_18","activation":"relu","inputs":["batch_normalization_18"],"params":0},{"class":"Activation","name":"activation_20","activation":"relu","inputs":["batch_normalization_20"],"params":0},{"class":"Activation","name":"activation_23","activation":"relu","inputs":["batch_normalization_23"],"params":0},{"class":"Concatenate","name":"block35_2_mixed","axis":3,"inputs":["activation_18","activation_20","activation_23"],"params":0},{"class":"Conv2D","name":"block35_2_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_2_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_1","scale":0.17,"inputs":["block35_1_ac","block35_2_conv"],"params":0},{"class":"Activation","name":"block35_2_ac","activation":"relu","inputs":["custom_scale_layer_1"],"params":0},{"class":"Conv2D","name":"conv2d_27","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_2_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_27","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_27"],"params":96},{"class":"Activation","name":"activation_27","activation":"relu","inputs":["batch_normalization_27"],"params":0},{"class":"Conv2D","name":"conv2d_25","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_2_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_28","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_27"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_25","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_25"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_28","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_28"],"params":144},{"class":"Activation","name":"activation_25","activation":"relu","inputs":["batch_normalization_25"],"params":0},{"class":"Activation","name":"activation_28","activation":"relu","inputs":["batch_normalization_28"],"params":0},{"class":"Conv2D","name":"conv2d_24","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_2_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_26","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_25"],"params":9216},{"class":"Conv2D","name":"conv2d_29","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_28"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_24","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_24"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_26","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_26"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_29","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_29"],"params":192},{"class":"Activation","name":"activation_24","activation":"relu","inputs":["batch_normalization_24"],"params":0},{"class":"Activation","name":"activation_26","activation":"relu","inputs":["batch_normalization_26"],"params":0},{"class":"Activation","name":"activation_29","activation":"relu","inputs":["batch_normalization_29"],"params":0},{"class":"Concatenate","name":"block35_3_mixed","axis":3,"inputs":["activation_24","activation_26","activation_29"],"params":0},{"class":"Conv2D","name":"block35_3_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_3_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_2","scale":0.17,"inputs":["block35_2_ac","block35_3_conv"],"params":0},{"class":"Activation","name":"block35_3_ac","activation":"relu","inputs":["custom_scale_layer_2"],"params":0},{"class":"Conv2D","name":"conv2d_33","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_3_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_33","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_33"],"params":96},{"class":"Activation","name":"activation_33","activation":"relu","inputs":["batch_normalization_33"],"params":0},{"class":"Conv2D","name":"conv2d_31","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_3_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_34","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_33"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_31","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_31"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_34","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_34"],"params":144},{"class":"Activation","name":"activation_31","activation":"relu","inputs":["batch_normalization_31"],"params":0},{"class":"Activation","name":"activation_34","activation":"relu","inputs":["batch_normalization_34"],"params":0},{"class":"Conv2D","name":"conv2d_30","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_3_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_32","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_31"],"params":9216},{"class":"Conv2D","name":"conv2d_35","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_34"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_30","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_30"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_32","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_32"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_35","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_35"],"params":192},{"class":"Activation","name":"activation_30","activation":"relu","inputs":["batch_normalization_30"],"params":0},{"class":"Activation","name":"activation_32","activation":"relu","inputs":["batch_normalization_32"],"params":0},{"class":"Activation","name":"activation_35","activation":"relu","inputs":["batch_normalization_35"],"params":0},{"class":"Concatenate","name":"block35_4_mixed","axis":3,"inputs":["activation_30","activation_32","activation_35"],"params":0},{"class":"Conv2D","name":"block35_4_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_4_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_3","scale":0.17,"inputs":["block35_3_ac","block35_4_conv"],"params":0},{"class":"Activation","name":"block35_4_ac","activation":"relu","inputs":["custom_scale_layer_3"],"params":0},{"class":"Conv2D","name":"conv2d_39","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_4_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_39","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_39"],"params":96},{"class":"Activation","name":"activation_39","activation":"relu","inputs":["batch_normalization_39"],"params":0},{"class":"Conv2D","name":"conv2d_37","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_4_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_40","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_39"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_37","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_37"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_40","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_40"],"params":144},{"class":"Activation","name":"activation_37","activation":"relu","inputs":["batch_normalization_37"],"params":0},{"class":"Activation","name":"activation_40","activation":"relu","inputs":["batch_normalization_40"],"params":0},{"class":"Conv2D","name":"conv2d_36","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_4_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_38","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_37"],"params":9216},{"class":"Conv2D","name":"conv2d_41","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_40"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_36","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_36"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_38","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_38"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_41","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_41"],"params":192},{"class":"Activation","name":"activation_36","activation":"relu","inputs":["batch_normalization_36"],"params":0},{"class":"Activation","name":"activation_38","activation":"relu","inputs":["batch_normalization_38"],"params":0},{"class":"Activation","name":"activation_41","activation":"relu","inputs":["batch_normalization_41"],"params":0},{"class":"Concatenate","name":"block35_5_mixed","axis":3,"inputs":["activation_36","activation_38","activation_41"],"params":0},{"class":"Conv2D","name":"block35_5_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_5_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_4","scale":0.17,"inputs":["block35_4_ac","block35_5_conv"],"params":0},{"class":"Activation","name":"block35_5_ac","activation":"relu","inputs":["custom_scale_layer_4"],"params":0},{"class":"Conv2D","name":"conv2d_45","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_5_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_45","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_45"],"params":96},{"class":"Activation","name":"activation_45","activation":"relu","inputs":["batch_normalization_45"],"params":0},{"class":"Conv2D","name":"conv2d_43","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_5_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_46","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_45"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_43","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_43"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_46","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_46"],"params":144},{"class":"Activation","name":"activation_43","activation":"relu","inputs":["batch_normalization_43"],"params":0},{"class":"Activation","name":"activation_46","activation":"relu","inputs":["batch_normalization_46"],"params":0},{"class":"Conv2D","name":"conv2d_42","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_5_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_44","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_43"],"params":9216},{"class":"Conv2D","name":"conv2d_47","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_46"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_42","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_42"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_44","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_44"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_47","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_47"],"params":192},{"class":"Activation","name":"activation_42","activation":"relu","inputs":["batch_normalization_42"],"params":0},{"class":"Activation","name":"activation_44","activation":"relu","inputs":["batch_normalization_44"],"params":0},{"class":"Activation","name":"activation_47","activation":"relu","inputs":["batch_normalization_47"],"params":0},{"class":"Concatenate","name":"block35_6_mixed","axis":3,"inputs":["activation_42","activation_44","activation_47"],"params":0},{"class":"Conv2D","name":"block35_6_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_6_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_5","scale":0.17,"inputs":["block35_5_ac","block35_6_conv"],"params":0},{"class":"Activation","name":"block35_6_ac","activation":"relu","inputs":["custom_scale_layer_5"],"params":0},{"class":"Conv2D","name":"conv2d_51","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_6_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_51","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_51"],"params":96},{"class":"Activation","name":"activation_51","activation":"relu","inputs":["batch_normalization_51"],"params":0},{"class":"Conv2D","name":"conv2d_49","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_6_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_52","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_51"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_49","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_49"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_52","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_52"],"params":144},{"class":"Activation","name":"activation_49","activation":"relu","inputs":["batch_normalization_49"],"params":0},{"class":"Activation","name":"activation_52","activation":"relu","inputs":["batch_normalization_52"],"params":0},{"class":"Conv2D","name":"conv2d_48","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_6_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_50","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_49"],"params":9216},{"class":"Conv2D","name":"conv2d_53","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_52"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_48","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_48"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_50","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_50"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_53","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_53"],"params":192},{"class":"Activation","name":"activation_48","activation":"relu","inputs":["batch_normalization_48"],"params":0},{"class":"Activation","name":"activation_50","activation":"relu","inputs":["batch_normalization_50"],"params":0},{"class":"Activation","name":"activation_53","activation":"relu","inputs":["batch_normalization_53"],"params":0},{"class":"Concatenate","name":"block35_7_mixed","axis":3,"inputs":["activation_48","activation_50","activation_53"],"params":0},{"class":"Conv2D","name":"block35_7_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_7_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_6","scale":0.17,"inputs":["block35_6_ac","block35_7_conv"],"params":0},{"class":"Activation","name":"block35_7_ac","activation":"relu","inputs":["custom_scale_layer_6"],"params":0},{"class":"Conv2D","name":"conv2d_57","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_7_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_57","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_57"],"params":96},{"class":"Activation","name":"activation_57","activation":"relu","inputs":["batch_normalization_57"],"params":0},{"class":"Conv2D","name":"conv2d_55","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_7_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_58","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_57"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_55","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_55"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_58","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_58"],"params":144},{"class":"Activation","name":"activation_55","activation":"relu","inputs":["batch_normalization_55"],"params":0},{"class":"Activation","name":"activation_58","activation":"relu","inputs":["batch_normalization_58"],"params":0},{"class":"Conv2D","name":"conv2d_54","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_7_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_56","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_55"],"params":9216},{"class":"Conv2D","name":"conv2d_59","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_58"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_54","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_54"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_56","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_56"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_59","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_59"],"params":192},{"class":"Activation","name":"activation_54","activation":"relu","inputs":["batch_normalization_54"],"params":0},{"class":"Activation","name":"activation_56","activation":"relu","inputs":["batch_normalization_56"],"params":0},{"class":"Activation","name":"activation_59","activation":"relu","inputs":["batch_normalization_59"],"params":0},{"class":"Concatenate","name":"block35_8_mixed","axis":3,"inputs":["activation_54","activation_56","activation_59"],"params":0},{"class":"Conv2D","name":"block35_8_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_8_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_7","scale":0.17,"inputs":["block35_7_ac","block35_8_conv"],"params":0},{"class":"Activation","name":"block35_8_ac","activation":"relu","inputs":["custom_scale_layer_7"],"params":0},{"class":"Conv2D","name":"conv2d_63","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_8_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_63","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_63"],"params":96},{"class":"Activation","name":"activation_63","activation":"relu","inputs":["batch_normalization_63"],"params":0},{"class":"Conv2D","name":"conv2d_61","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_8_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_64","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_63"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_61","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_61"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_64","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_64"],"params":144},{"class":"Activation","name":"activation_61","activation":"relu","inputs":["batch_normalization_61"],"params":0},{"class":"Activation","name":"activation_64","activation":"relu","inputs":["batch_normalization_64"],"params":0},{"class":"Conv2D","name":"conv2d_60","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_8_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_62","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_61"],"params":9216},{"class":"Conv2D","name":"conv2d_65","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_64"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_60","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_60"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_62","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_62"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_65","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_65"],"params":192},{"class":"Activation","name":"activation_60","activation":"relu","inputs":["batch_normalization_60"],"params":0},{"class":"Activation","name":"activation_62","activation":"relu","inputs":["batch_normalization_62"],"params":0},{"class":"Activation","name":"activation_65","activation":"relu","inputs":["batch_normalization_65"],"params":0},{"class":"Concatenate","name":"block35_9_mixed","axis":3,"inputs":["activation_60","activation_62","activation_65"],"params":0},{"class":"Conv2D","name":"block35_9_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_9_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_8","scale":0.17,"inputs":["block35_8_ac","block35_9_conv"],"params":0},{"class":"Activation","name":"block35_9_ac","activation":"relu","inputs":["custom_scale_layer_8"],"params":0},{"class":"Conv2D","name":"conv2d_69","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_9_ac"],"params":10240},{"class":"BatchNormalization","name":"batch_normalization_69","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_69"],"params":96},{"class":"Activation","name":"activation_69","activation":"relu","inputs":["batch_normalization_69"],"params":0},{"class":"Conv2D","name":"conv2d_67","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_9_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_70","filters":48,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_69"],"params":13824},{"class":"BatchNormalization","name":"batch_normalization_67","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_67"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_70","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_70"],"params":144},{"class":"Activation","name":"activation_67","activation":"relu","inputs":["batch_normalization_67"],"params":0},{"class":"Activation","name":"activation_70","activation":"relu","inputs":["batch_normalization_70"],"params":0},{"class":"Conv2D","name":"conv2d_66","filters":32,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_9_ac"],"params":10240},{"class":"Conv2D","name":"conv2d_68","filters":32,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_67"],"params":9216},{"class":"Conv2D","name":"conv2d_71","filters":64,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_70"],"params":27648},{"class":"BatchNormalization","name":"batch_normalization_66","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_66"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_68","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_68"],"params":96},{"class":"BatchNormalization","name":"batch_normalization_71","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_71"],"params":192},{"class":"Activation","name":"activation_66","activation":"relu","inputs":["batch_normalization_66"],"params":0},{"class":"Activation","name":"activation_68","activation":"relu","inputs":["batch_normalization_68"],"params":0},{"class":"Activation","name":"activation_71","activation":"relu","inputs":["batch_normalization_71"],"params":0},{"class":"Concatenate","name":"block35_10_mixed","axis":3,"inputs":["activation_66","activation_68","activation_71"],"params":0},{"class":"Conv2D","name":"block35_10_conv","filters":320,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block35_10_mixed"],"params":41280},{"class":"CustomScaleLayer","name":"custom_scale_layer_9","scale":0.17,"inputs":["block35_9_ac","block35_10_conv"],"params":0},{"class":"Activation","name":"block35_10_ac","activation":"relu","inputs":["custom_scale_layer_9"],"params":0},{"class":"Conv2D","name":"conv2d_73","filters":256,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block35_10_ac"],"params":81920},{"class":"BatchNormalization","name":"batch_normalization_73","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_73"],"params":768},{"class":"Activation","name":"activation_73","activation":"relu","inputs":["batch_normalization_73"],"params":0},{"class":"Conv2D","name":"conv2d_74","filters":256,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_73"],"params":589824},{"class":"BatchNormalization","name":"batch_normalization_74","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_74"],"params":768},{"class":"Activation","name":"activation_74","activation":"relu","inputs":["batch_normalization_74"],"params":0},{"class":"Conv2D","name":"conv2d_72","filters":384,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["block35_10_ac"],"params":1105920},{"class":"Conv2D","name":"conv2d_75","filters":384,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_74"],"params":884736},{"class":"BatchNormalization","name":"batch_normalization_72","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_72"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_75","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_75"],"params":1152},{"class":"Activation","name":"activation_72","activation":"relu","inputs":["batch_normalization_72"],"params":0},{"class":"Activation","name":"activation_75","activation":"relu","inputs":["batch_normalization_75"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d_2","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["block35_10_ac"],"params":0},{"class":"Concatenate","name":"mixed_6a","axis":3,"inputs":["activation_72","activation_75","max_pooling2d_2"],"params":0},{"class":"Conv2D","name":"conv2d_77","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed_6a"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_77","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_77"],"params":384},{"class":"Activation","name":"activation_77","activation":"relu","inputs":["batch_normalization_77"],"params":0},{"class":"Conv2D","name":"conv2d_78","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_77"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_78","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_78"],"params":480},{"class":"Activation","name":"activation_78","activation":"relu","inputs":["batch_normalization_78"],"params":0},{"class":"Conv2D","name":"conv2d_76","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed_6a"],"params":208896},{"class":"Conv2D","name":"conv2d_79","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_78"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_76","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_76"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_79","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_79"],"params":576},{"class":"Activation","name":"activation_76","activation":"relu","inputs":["batch_normalization_76"],"params":0},{"class":"Activation","name":"activation_79","activation":"relu","inputs":["batch_normalization_79"],"params":0},{"class":"Concatenate","name":"block17_1_mixed","axis":3,"inputs":["activation_76","activation_79"],"params":0},{"class":"Conv2D","name":"block17_1_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_1_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_10","scale":0.1,"inputs":["mixed_6a","block17_1_conv"],"params":0},{"class":"Activation","name":"block17_1_ac","activation":"relu","inputs":["custom_scale_layer_10"],"params":0},{"class":"Conv2D","name":"conv2d_81","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_1_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_81","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_81"],"params":384},{"class":"Activation","name":"activation_81","activation":"relu","inputs":["batch_normalization_81"],"params":0},{"class":"Conv2D","name":"conv2d_82","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_81"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_82","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_82"],"params":480},{"class":"Activation","name":"activation_82","activation":"relu","inputs":["batch_normalization_82"],"params":0},{"class":"Conv2D","name":"conv2d_80","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_1_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_83","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_82"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_80","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_80"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_83","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_83"],"params":576},{"class":"Activation","name":"activation_80","activation":"relu","inputs":["batch_normalization_80"],"params":0},{"class":"Activation","name":"activation_83","activation":"relu","inputs":["batch_normalization_83"],"params":0},{"class":"Concatenate","name":"block17_2_mixed","axis":3,"inputs":["activation_80","activation_83"],"params":0},{"class":"Conv2D","name":"block17_2_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_2_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_11","scale":0.1,"inputs":["block17_1_ac","block17_2_conv"],"params":0},{"class":"Activation","name":"block17_2_ac","activation":"relu","inputs":["custom_scale_layer_11"],"params":0},{"class":"Conv2D","name":"conv2d_85","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_2_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_85","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_85"],"params":384},{"class":"Activation","name":"activation_85","activation":"relu","inputs":["batch_normalization_85"],"params":0},{"class":"Conv2D","name":"conv2d_86","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_85"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_86","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_86"],"params":480},{"class":"Activation","name":"activation_86","activation":"relu","inputs":["batch_normalization_86"],"params":0},{"class":"Conv2D","name":"conv2d_84","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_2_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_87","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_86"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_84","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_84"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_87","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_87"],"params":576},{"class":"Activation","name":"activation_84","activation":"relu","inputs":["batch_normalization_84"],"params":0},{"class":"Activation","name":"activation_87","activation":"relu","inputs":["batch_normalization_87"],"params":0},{"class":"Concatenate","name":"block17_3_mixed","axis":3,"inputs":["activation_84","activation_87"],"params":0},{"class":"Conv2D","name":"block17_3_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_3_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_12","scale":0.1,"inputs":["block17_2_ac","block17_3_conv"],"params":0},{"class":"Activation","name":"block17_3_ac","activation":"relu","inputs":["custom_scale_layer_12"],"params":0},{"class":"Conv2D","name":"conv2d_89","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_3_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_89","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_89"],"params":384},{"class":"Activation","name":"activation_89","activation":"relu","inputs":["batch_normalization_89"],"params":0},{"class":"Conv2D","name":"conv2d_90","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_89"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_90","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_90"],"params":480},{"class":"Activation","name":"activation_90","activation":"relu","inputs":["batch_normalization_90"],"params":0},{"class":"Conv2D","name":"conv2d_88","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_3_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_91","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_90"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_88","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_88"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_91","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_91"],"params":576},{"class":"Activation","name":"activation_88","activation":"relu","inputs":["batch_normalization_88"],"params":0},{"class":"Activation","name":"activation_91","activation":"relu","inputs":["batch_normalization_91"],"params":0},{"class":"Concatenate","name":"block17_4_mixed","axis":3,"inputs":["activation_88","activation_91"],"params":0},{"class":"Conv2D","name":"block17_4_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_4_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_13","scale":0.1,"inputs":["block17_3_ac","block17_4_conv"],"params":0},{"class":"Activation","name":"block17_4_ac","activation":"relu","inputs":["custom_scale_layer_13"],"params":0},{"class":"Conv2D","name":"conv2d_93","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_4_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_93","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_93"],"params":384},{"class":"Activation","name":"activation_93","activation":"relu","inputs":["batch_normalization_93"],"params":0},{"class":"Conv2D","name":"conv2d_94","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_93"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_94","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_94"],"params":480},{"class":"Activation","name":"activation_94","activation":"relu","inputs":["batch_normalization_94"],"params":0},{"class":"Conv2D","name":"conv2d_92","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_4_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_95","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_94"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_92","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_92"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_95","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_95"],"params":576},{"class":"Activation","name":"activation_92","activation":"relu","inputs":["batch_normalization_92"],"params":0},{"class":"Activation","name":"activation_95","activation":"relu","inputs":["batch_normalization_95"],"params":0},{"class":"Concatenate","name":"block17_5_mixed","axis":3,"inputs":["activation_92","activation_95"],"params":0},{"class":"Conv2D","name":"block17_5_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_5_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_14","scale":0.1,"inputs":["block17_4_ac","block17_5_conv"],"params":0},{"class":"Activation","name":"block17_5_ac","activation":"relu","inputs":["custom_scale_layer_14"],"params":0},{"class":"Conv2D","name":"conv2d_97","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_5_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_97","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_97"],"params":384},{"class":"Activation","name":"activation_97","activation":"relu","inputs":["batch_normalization_97"],"params":0},{"class":"Conv2D","name":"conv2d_98","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_97"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_98","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_98"],"params":480},{"class":"Activation","name":"activation_98","activation":"relu","inputs":["batch_normalization_98"],"params":0},{"class":"Conv2D","name":"conv2d_96","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_5_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_99","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_98"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_96","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_96"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_99","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_99"],"params":576},{"class":"Activation","name":"activation_96","activation":"relu","inputs":["batch_normalization_96"],"params":0},{"class":"Activation","name":"activation_99","activation":"relu","inputs":["batch_normalization_99"],"params":0},{"class":"Concatenate","name":"block17_6_mixed","axis":3,"inputs":["activation_96","activation_99"],"params":0},{"class":"Conv2D","name":"block17_6_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_6_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_15","scale":0.1,"inputs":["block17_5_ac","block17_6_conv"],"params":0},{"class":"Activation","name":"block17_6_ac","activation":"relu","inputs":["custom_scale_layer_15"],"params":0},{"class":"Conv2D","name":"conv2d_101","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_6_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_101","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_101"],"params":384},{"class":"Activation","name":"activation_101","activation":"relu","inputs":["batch_normalization_101"],"params":0},{"class":"Conv2D","name":"conv2d_102","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_101"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_102","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_102"],"params":480},{"class":"Activation","name":"activation_102","activation":"relu","inputs":["batch_normalization_102"],"params":0},{"class":"Conv2D","name":"conv2d_100","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_6_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_103","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_102"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_100","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_100"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_103","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_103"],"params":576},{"class":"Activation","name":"activation_100","activation":"relu","inputs":["batch_normalization_100"],"params":0},{"class":"Activation","name":"activation_103","activation":"relu","inputs":["batch_normalization_103"],"params":0},{"class":"Concatenate","name":"block17_7_mixed","axis":3,"inputs":["activation_100","activation_103"],"params":0},{"class":"Conv2D","name":"block17_7_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_7_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_16","scale":0.1,"inputs":["block17_6_ac","block17_7_conv"],"params":0},{"class":"Activation","name":"block17_7_ac","activation":"relu","inputs":["custom_scale_layer_16"],"params":0},{"class":"Conv2D","name":"conv2d_105","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_7_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_105","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_105"],"params":384},{"class":"Activation","name":"activation_105","activation":"relu","inputs":["batch_normalization_105"],"params":0},{"class":"Conv2D","name":"conv2d_106","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_105"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_106","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_106"],"params":480},{"class":"Activation","name":"activation_106","activation":"relu","inputs":["batch_normalization_106"],"params":0},{"class":"Conv2D","name":"conv2d_104","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_7_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_107","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_106"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_104","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_104"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_107","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_107"],"params":576},{"class":"Activation","name":"activation_104","activation":"relu","inputs":["batch_normalization_104"],"params":0},{"class":"Activation","name":"activation_107","activation":"relu","inputs":["batch_normalization_107"],"params":0},{"class":"Concatenate","name":"block17_8_mixed","axis":3,"inputs":["activation_104","activation_107"],"params":0},{"class":"Conv2D","name":"block17_8_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_8_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_17","scale":0.1,"inputs":["block17_7_ac","block17_8_conv"],"params":0},{"class":"Activation","name":"block17_8_ac","activation":"relu","inputs":["custom_scale_layer_17"],"params":0},{"class":"Conv2D","name":"conv2d_109","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_8_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_109","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_109"],"params":384},{"class":"Activation","name":"activation_109","activation":"relu","inputs":["batch_normalization_109"],"params":0},{"class":"Conv2D","name":"conv2d_110","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_109"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_110","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_110"],"params":480},{"class":"Activation","name":"activation_110","activation":"relu","inputs":["batch_normalization_110"],"params":0},{"class":"Conv2D","name":"conv2d_108","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_8_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_111","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_110"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_108","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_108"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_111","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_111"],"params":576},{"class":"Activation","name":"activation_108","activation":"relu","inputs":["batch_normalization_108"],"params":0},{"class":"Activation","name":"activation_111","activation":"relu","inputs":["batch_normalization_111"],"params":0},{"class":"Concatenate","name":"block17_9_mixed","axis":3,"inputs":["activation_108","activation_111"],"params":0},{"class":"Conv2D","name":"block17_9_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_9_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_18","scale":0.1,"inputs":["block17_8_ac","block17_9_conv"],"params":0},{"class":"Activation","name":"block17_9_ac","activation":"relu","inputs":["custom_scale_layer_18"],"params":0},{"class":"Conv2D","name":"conv2d_113","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_9_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_113","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_113"],"params":384},{"class":"Activation","name":"activation_113","activation":"relu","inputs":["batch_normalization_113"],"params":0},{"class":"Conv2D","name":"conv2d_114","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_113"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_114","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_114"],"params":480},{"class":"Activation","name":"activation_114","activation":"relu","inputs":["batch_normalization_114"],"params":0},{"class":"Conv2D","name":"conv2d_112","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_9_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_115","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_114"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_112","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_112"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_115","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_115"],"params":576},{"class":"Activation","name":"activation_112","activation":"relu","inputs":["batch_normalization_112"],"params":0},{"class":"Activation","name":"activation_115","activation":"relu","inputs":["batch_normalization_115"],"params":0},{"class":"Concatenate","name":"block17_10_mixed","axis":3,"inputs":["activation_112","activation_115"],"params":0},{"class":"Conv2D","name":"block17_10_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_10_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_19","scale":0.1,"inputs":["block17_9_ac","block17_10_conv"],"params":0},{"class":"Activation","name":"block17_10_ac","activation":"relu","inputs":["custom_scale_layer_19"],"params":0},{"class":"Conv2D","name":"conv2d_117","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_10_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_117","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_117"],"params":384},{"class":"Activation","name":"activation_117","activation":"relu","inputs":["batch_normalization_117"],"params":0},{"class":"Conv2D","name":"conv2d_118","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_117"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_118","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_118"],"params":480},{"class":"Activation","name":"activation_118","activation":"relu","inputs":["batch_normalization_118"],"params":0},{"class":"Conv2D","name":"conv2d_116","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_10_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_119","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_118"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_116","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_116"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_119","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_119"],"params":576},{"class":"Activation","name":"activation_116","activation":"relu","inputs":["batch_normalization_116"],"params":0},{"class":"Activation","name":"activation_119","activation":"relu","inputs":["batch_normalization_119"],"params":0},{"class":"Concatenate","name":"block17_11_mixed","axis":3,"inputs":["activation_116","activation_119"],"params":0},{"class":"Conv2D","name":"block17_11_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_11_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_20","scale":0.1,"inputs":["block17_10_ac","block17_11_conv"],"params":0},{"class":"Activation","name":"block17_11_ac","activation":"relu","inputs":["custom_scale_layer_20"],"params":0},{"class":"Conv2D","name":"conv2d_121","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_11_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_121","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_121"],"params":384},{"class":"Activation","name":"activation_121","activation":"relu","inputs":["batch_normalization_121"],"params":0},{"class":"Conv2D","name":"conv2d_122","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_121"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_122","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_122"],"params":480},{"class":"Activation","name":"activation_122","activation":"relu","inputs":["batch_normalization_122"],"params":0},{"class":"Conv2D","name":"conv2d_120","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_11_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_123","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_122"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_120","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_120"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_123","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_123"],"params":576},{"class":"Activation","name":"activation_120","activation":"relu","inputs":["batch_normalization_120"],"params":0},{"class":"Activation","name":"activation_123","activation":"relu","inputs":["batch_normalization_123"],"params":0},{"class":"Concatenate","name":"block17_12_mixed","axis":3,"inputs":["activation_120","activation_123"],"params":0},{"class":"Conv2D","name":"block17_12_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_12_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_21","scale":0.1,"inputs":["block17_11_ac","block17_12_conv"],"params":0},{"class":"Activation","name":"block17_12_ac","activation":"relu","inputs":["custom_scale_layer_21"],"params":0},{"class":"Conv2D","name":"conv2d_125","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_12_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_125","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_125"],"params":384},{"class":"Activation","name":"activation_125","activation":"relu","inputs":["batch_normalization_125"],"params":0},{"class":"Conv2D","name":"conv2d_126","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_125"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_126","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_126"],"params":480},{"class":"Activation","name":"activation_126","activation":"relu","inputs":["batch_normalization_126"],"params":0},{"class":"Conv2D","name":"conv2d_124","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_12_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_127","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_126"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_124","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_124"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_127","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_127"],"params":576},{"class":"Activation","name":"activation_124","activation":"relu","inputs":["batch_normalization_124"],"params":0},{"class":"Activation","name":"activation_127","activation":"relu","inputs":["batch_normalization_127"],"params":0},{"class":"Concatenate","name":"block17_13_mixed","axis":3,"inputs":["activation_124","activation_127"],"params":0},{"class":"Conv2D","name":"block17_13_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_13_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_22","scale":0.1,"inputs":["block17_12_ac","block17_13_conv"],"params":0},{"class":"Activation","name":"block17_13_ac","activation":"relu","inputs":["custom_scale_layer_22"],"params":0},{"class":"Conv2D","name":"conv2d_129","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_13_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_129","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_129"],"params":384},{"class":"Activation","name":"activation_129","activation":"relu","inputs":["batch_normalization_129"],"params":0},{"class":"Conv2D","name":"conv2d_130","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_129"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_130","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_130"],"params":480},{"class":"Activation","name":"activation_130","activation":"relu","inputs":["batch_normalization_130"],"params":0},{"class":"Conv2D","name":"conv2d_128","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_13_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_131","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_130"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_128","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_128"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_131","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_131"],"params":576},{"class":"Activation","name":"activation_128","activation":"relu","inputs":["batch_normalization_128"],"params":0},{"class":"Activation","name":"activation_131","activation":"relu","inputs":["batch_normalization_131"],"params":0},{"class":"Concatenate","name":"block17_14_mixed","axis":3,"inputs":["activation_128","activation_131"],"params":0},{"class":"Conv2D","name":"block17_14_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_14_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_23","scale":0.1,"inputs":["block17_13_ac","block17_14_conv"],"params":0},{"class":"Activation","name":"block17_14_ac","activation":"relu","inputs":["custom_scale_layer_23"],"params":0},{"class":"Conv2D","name":"conv2d_133","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_14_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_133","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_133"],"params":384},{"class":"Activation","name":"activation_133","activation":"relu","inputs":["batch_normalization_133"],"params":0},{"class":"Conv2D","name":"conv2d_134","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_133"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_134","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_134"],"params":480},{"class":"Activation","name":"activation_134","activation":"relu","inputs":["batch_normalization_134"],"params":0},{"class":"Conv2D","name":"conv2d_132","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_14_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_135","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_134"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_132","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_132"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_135","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_135"],"params":576},{"class":"Activation","name":"activation_132","activation":"relu","inputs":["batch_normalization_132"],"params":0},{"class":"Activation","name":"activation_135","activation":"relu","inputs":["batch_normalization_135"],"params":0},{"class":"Concatenate","name":"block17_15_mixed","axis":3,"inputs":["activation_132","activation_135"],"params":0},{"class":"Conv2D","name":"block17_15_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_15_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_24","scale":0.1,"inputs":["block17_14_ac","block17_15_conv"],"params":0},{"class":"Activation","name":"block17_15_ac","activation":"relu","inputs":["custom_scale_layer_24"],"params":0},{"class":"Conv2D","name":"conv2d_137","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_15_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_137","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_137"],"params":384},{"class":"Activation","name":"activation_137","activation":"relu","inputs":["batch_normalization_137"],"params":0},{"class":"Conv2D","name":"conv2d_138","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_137"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_138","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_138"],"params":480},{"class":"Activation","name":"activation_138","activation":"relu","inputs":["batch_normalization_138"],"params":0},{"class":"Conv2D","name":"conv2d_136","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_15_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_139","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_138"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_136","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_136"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_139","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_139"],"params":576},{"class":"Activation","name":"activation_136","activation":"relu","inputs":["batch_normalization_136"],"params":0},{"class":"Activation","name":"activation_139","activation":"relu","inputs":["batch_normalization_139"],"params":0},{"class":"Concatenate","name":"block17_16_mixed","axis":3,"inputs":["activation_136","activation_139"],"params":0},{"class":"Conv2D","name":"block17_16_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_16_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_25","scale":0.1,"inputs":["block17_15_ac","block17_16_conv"],"params":0},{"class":"Activation","name":"block17_16_ac","activation":"relu","inputs":["custom_scale_layer_25"],"params":0},{"class":"Conv2D","name":"conv2d_141","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_16_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_141","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_141"],"params":384},{"class":"Activation","name":"activation_141","activation":"relu","inputs":["batch_normalization_141"],"params":0},{"class":"Conv2D","name":"conv2d_142","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_141"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_142","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_142"],"params":480},{"class":"Activation","name":"activation_142","activation":"relu","inputs":["batch_normalization_142"],"params":0},{"class":"Conv2D","name":"conv2d_140","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_16_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_143","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_142"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_140","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_140"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_143","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_143"],"params":576},{"class":"Activation","name":"activation_140","activation":"relu","inputs":["batch_normalization_140"],"params":0},{"class":"Activation","name":"activation_143","activation":"relu","inputs":["batch_normalization_143"],"params":0},{"class":"Concatenate","name":"block17_17_mixed","axis":3,"inputs":["activation_140","activation_143"],"params":0},{"class":"Conv2D","name":"block17_17_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_17_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_26","scale":0.1,"inputs":["block17_16_ac","block17_17_conv"],"params":0},{"class":"Activation","name":"block17_17_ac","activation":"relu","inputs":["custom_scale_layer_26"],"params":0},{"class":"Conv2D","name":"conv2d_145","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_17_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_145","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_145"],"params":384},{"class":"Activation","name":"activation_145","activation":"relu","inputs":["batch_normalization_145"],"params":0},{"class":"Conv2D","name":"conv2d_146","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_145"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_146","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_146"],"params":480},{"class":"Activation","name":"activation_146","activation":"relu","inputs":["batch_normalization_146"],"params":0},{"class":"Conv2D","name":"conv2d_144","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_17_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_147","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_146"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_144","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_144"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_147","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_147"],"params":576},{"class":"Activation","name":"activation_144","activation":"relu","inputs":["batch_normalization_144"],"params":0},{"class":"Activation","name":"activation_147","activation":"relu","inputs":["batch_normalization_147"],"params":0},{"class":"Concatenate","name":"block17_18_mixed","axis":3,"inputs":["activation_144","activation_147"],"params":0},{"class":"Conv2D","name":"block17_18_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_18_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_27","scale":0.1,"inputs":["block17_17_ac","block17_18_conv"],"params":0},{"class":"Activation","name":"block17_18_ac","activation":"relu","inputs":["custom_scale_layer_27"],"params":0},{"class":"Conv2D","name":"conv2d_149","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_18_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_149","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_149"],"params":384},{"class":"Activation","name":"activation_149","activation":"relu","inputs":["batch_normalization_149"],"params":0},{"class":"Conv2D","name":"conv2d_150","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_149"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_150","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_150"],"params":480},{"class":"Activation","name":"activation_150","activation":"relu","inputs":["batch_normalization_150"],"params":0},{"class":"Conv2D","name":"conv2d_148","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_18_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_151","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_150"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_148","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_148"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_151","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_151"],"params":576},{"class":"Activation","name":"activation_148","activation":"relu","inputs":["batch_normalization_148"],"params":0},{"class":"Activation","name":"activation_151","activation":"relu","inputs":["batch_normalization_151"],"params":0},{"class":"Concatenate","name":"block17_19_mixed","axis":3,"inputs":["activation_148","activation_151"],"params":0},{"class":"Conv2D","name":"block17_19_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_19_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_28","scale":0.1,"inputs":["block17_18_ac","block17_19_conv"],"params":0},{"class":"Activation","name":"block17_19_ac","activation":"relu","inputs":["custom_scale_layer_28"],"params":0},{"class":"Conv2D","name":"conv2d_153","filters":128,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_19_ac"],"params":139264},{"class":"BatchNormalization","name":"batch_normalization_153","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_153"],"params":384},{"class":"Activation","name":"activation_153","activation":"relu","inputs":["batch_normalization_153"],"params":0},{"class":"Conv2D","name":"conv2d_154","filters":160,"kernel_size":[1,7],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_153"],"params":143360},{"class":"BatchNormalization","name":"batch_normalization_154","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_154"],"params":480},{"class":"Activation","name":"activation_154","activation":"relu","inputs":["batch_normalization_154"],"params":0},{"class":"Conv2D","name":"conv2d_152","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_19_ac"],"params":208896},{"class":"Conv2D","name":"conv2d_155","filters":192,"kernel_size":[7,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_154"],"params":215040},{"class":"BatchNormalization","name":"batch_normalization_152","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_152"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_155","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_155"],"params":576},{"class":"Activation","name":"activation_152","activation":"relu","inputs":["batch_normalization_152"],"params":0},{"class":"Activation","name":"activation_155","activation":"relu","inputs":["batch_normalization_155"],"params":0},{"class":"Concatenate","name":"block17_20_mixed","axis":3,"inputs":["activation_152","activation_155"],"params":0},{"class":"Conv2D","name":"block17_20_conv","filters":1088,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block17_20_mixed"],"params":418880},{"class":"CustomScaleLayer","name":"custom_scale_layer_29","scale":0.1,"inputs":["block17_19_ac","block17_20_conv"],"params":0},{"class":"Activation","name":"block17_20_ac","activation":"relu","inputs":["custom_scale_layer_29"],"params":0},{"class":"Conv2D","name":"conv2d_160","filters":256,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_20_ac"],"params":278528},{"class":"BatchNormalization","name":"batch_normalization_160","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_160"],"params":768},{"class":"Activation","name":"activation_160","activation":"relu","inputs":["batch_normalization_160"],"params":0},{"class":"Conv2D","name":"conv2d_156","filters":256,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_20_ac"],"params":278528},{"class":"Conv2D","name":"conv2d_158","filters":256,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block17_20_ac"],"params":278528},{"class":"Conv2D","name":"conv2d_161","filters":288,"kernel_size":[3,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_160"],"params":663552},{"class":"BatchNormalization","name":"batch_normalization_156","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_156"],"params":768},{"class":"BatchNormalization","name":"batch_normalization_158","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_158"],"params":768},{"class":"BatchNormalization","name":"batch_normalization_161","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_161"],"params":864},{"class":"Activation","name":"activation_156","activation":"relu","inputs":["batch_normalization_156"],"params":0},{"class":"Activation","name":"activation_158","activation":"relu","inputs":["batch_normalization_158"],"params":0},{"class":"Activation","name":"activation_161","activation":"relu","inputs":["batch_normalization_161"],"params":0},{"class":"Conv2D","name":"conv2d_157","filters":384,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_156"],"params":884736},{"class":"Conv2D","name":"conv2d_159","filters":288,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_158"],"params":663552},{"class":"Conv2D","name":"conv2d_162","filters":320,"kernel_size":[3,3],"strides":[2,2],"padding":"valid","use_bias":false,"activation":"linear","inputs":["activation_161"],"params":829440},{"class":"BatchNormalization","name":"batch_normalization_157","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_157"],"params":1152},{"class":"BatchNormalization","name":"batch_normalization_159","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_159"],"params":864},{"class":"BatchNormalization","name":"batch_normalization_162","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_162"],"params":960},{"class":"Activation","name":"activation_157","activation":"relu","inputs":["batch_normalization_157"],"params":0},{"class":"Activation","name":"activation_159","activation":"relu","inputs":["batch_normalization_159"],"params":0},{"class":"Activation","name":"activation_162","activation":"relu","inputs":["batch_normalization_162"],"params":0},{"class":"MaxPooling2D","name":"max_pooling2d_3","strides":[2,2],"padding":"valid","pool_size":[3,3],"inputs":["block17_20_ac"],"params":0},{"class":"Concatenate","name":"mixed_7a","axis":3,"inputs":["activation_157","activation_159","activation_162","max_pooling2d_3"],"params":0},{"class":"Conv2D","name":"conv2d_164","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed_7a"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_164","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_164"],"params":576},{"class":"Activation","name":"activation_164","activation":"relu","inputs":["batch_normalization_164"],"params":0},{"class":"Conv2D","name":"conv2d_165","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_164"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_165","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_165"],"params":672},{"class":"Activation","name":"activation_165","activation":"relu","inputs":["batch_normalization_165"],"params":0},{"class":"Conv2D","name":"conv2d_163","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["mixed_7a"],"params":399360},{"class":"Conv2D","name":"conv2d_166","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_165"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_163","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_163"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_166","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_166"],"params":768},{"class":"Activation","name":"activation_163","activation":"relu","inputs":["batch_normalization_163"],"params":0},{"class":"Activation","name":"activation_166","activation":"relu","inputs":["batch_normalization_166"],"params":0},{"class":"Concatenate","name":"block8_1_mixed","axis":3,"inputs":["activation_163","activation_166"],"params":0},{"class":"Conv2D","name":"block8_1_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_1_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_30","scale":0.2,"inputs":["mixed_7a","block8_1_conv"],"params":0},{"class":"Activation","name":"block8_1_ac","activation":"relu","inputs":["custom_scale_layer_30"],"params":0},{"class":"Conv2D","name":"conv2d_168","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_1_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_168","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_168"],"params":576},{"class":"Activation","name":"activation_168","activation":"relu","inputs":["batch_normalization_168"],"params":0},{"class":"Conv2D","name":"conv2d_169","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_168"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_169","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_169"],"params":672},{"class":"Activation","name":"activation_169","activation":"relu","inputs":["batch_normalization_169"],"params":0},{"class":"Conv2D","name":"conv2d_167","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_1_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_170","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_169"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_167","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_167"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_170","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_170"],"params":768},{"class":"Activation","name":"activation_167","activation":"relu","inputs":["batch_normalization_167"],"params":0},{"class":"Activation","name":"activation_170","activation":"relu","inputs":["batch_normalization_170"],"params":0},{"class":"Concatenate","name":"block8_2_mixed","axis":3,"inputs":["activation_167","activation_170"],"params":0},{"class":"Conv2D","name":"block8_2_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_2_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_31","scale":0.2,"inputs":["block8_1_ac","block8_2_conv"],"params":0},{"class":"Activation","name":"block8_2_ac","activation":"relu","inputs":["custom_scale_layer_31"],"params":0},{"class":"Conv2D","name":"conv2d_172","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_2_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_172","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_172"],"params":576},{"class":"Activation","name":"activation_172","activation":"relu","inputs":["batch_normalization_172"],"params":0},{"class":"Conv2D","name":"conv2d_173","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_172"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_173","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_173"],"params":672},{"class":"Activation","name":"activation_173","activation":"relu","inputs":["batch_normalization_173"],"params":0},{"class":"Conv2D","name":"conv2d_171","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_2_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_174","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_173"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_171","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_171"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_174","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_174"],"params":768},{"class":"Activation","name":"activation_171","activation":"relu","inputs":["batch_normalization_171"],"params":0},{"class":"Activation","name":"activation_174","activation":"relu","inputs":["batch_normalization_174"],"params":0},{"class":"Concatenate","name":"block8_3_mixed","axis":3,"inputs":["activation_171","activation_174"],"params":0},{"class":"Conv2D","name":"block8_3_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_3_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_32","scale":0.2,"inputs":["block8_2_ac","block8_3_conv"],"params":0},{"class":"Activation","name":"block8_3_ac","activation":"relu","inputs":["custom_scale_layer_32"],"params":0},{"class":"Conv2D","name":"conv2d_176","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_3_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_176","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_176"],"params":576},{"class":"Activation","name":"activation_176","activation":"relu","inputs":["batch_normalization_176"],"params":0},{"class":"Conv2D","name":"conv2d_177","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_176"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_177","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_177"],"params":672},{"class":"Activation","name":"activation_177","activation":"relu","inputs":["batch_normalization_177"],"params":0},{"class":"Conv2D","name":"conv2d_175","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_3_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_178","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_177"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_175","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_175"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_178","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_178"],"params":768},{"class":"Activation","name":"activation_175","activation":"relu","inputs":["batch_normalization_175"],"params":0},{"class":"Activation","name":"activation_178","activation":"relu","inputs":["batch_normalization_178"],"params":0},{"class":"Concatenate","name":"block8_4_mixed","axis":3,"inputs":["activation_175","activation_178"],"params":0},{"class":"Conv2D","name":"block8_4_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_4_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_33","scale":0.2,"inputs":["block8_3_ac","block8_4_conv"],"params":0},{"class":"Activation","name":"block8_4_ac","activation":"relu","inputs":["custom_scale_layer_33"],"params":0},{"class":"Conv2D","name":"conv2d_180","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_4_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_180","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_180"],"params":576},{"class":"Activation","name":"activation_180","activation":"relu","inputs":["batch_normalization_180"],"params":0},{"class":"Conv2D","name":"conv2d_181","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_180"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_181","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_181"],"params":672},{"class":"Activation","name":"activation_181","activation":"relu","inputs":["batch_normalization_181"],"params":0},{"class":"Conv2D","name":"conv2d_179","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_4_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_182","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_181"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_179","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_179"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_182","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_182"],"params":768},{"class":"Activation","name":"activation_179","activation":"relu","inputs":["batch_normalization_179"],"params":0},{"class":"Activation","name":"activation_182","activation":"relu","inputs":["batch_normalization_182"],"params":0},{"class":"Concatenate","name":"block8_5_mixed","axis":3,"inputs":["activation_179","activation_182"],"params":0},{"class":"Conv2D","name":"block8_5_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_5_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_34","scale":0.2,"inputs":["block8_4_ac","block8_5_conv"],"params":0},{"class":"Activation","name":"block8_5_ac","activation":"relu","inputs":["custom_scale_layer_34"],"params":0},{"class":"Conv2D","name":"conv2d_184","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_5_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_184","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_184"],"params":576},{"class":"Activation","name":"activation_184","activation":"relu","inputs":["batch_normalization_184"],"params":0},{"class":"Conv2D","name":"conv2d_185","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_184"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_185","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_185"],"params":672},{"class":"Activation","name":"activation_185","activation":"relu","inputs":["batch_normalization_185"],"params":0},{"class":"Conv2D","name":"conv2d_183","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_5_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_186","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_185"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_183","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_183"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_186","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_186"],"params":768},{"class":"Activation","name":"activation_183","activation":"relu","inputs":["batch_normalization_183"],"params":0},{"class":"Activation","name":"activation_186","activation":"relu","inputs":["batch_normalization_186"],"params":0},{"class":"Concatenate","name":"block8_6_mixed","axis":3,"inputs":["activation_183","activation_186"],"params":0},{"class":"Conv2D","name":"block8_6_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_6_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_35","scale":0.2,"inputs":["block8_5_ac","block8_6_conv"],"params":0},{"class":"Activation","name":"block8_6_ac","activation":"relu","inputs":["custom_scale_layer_35"],"params":0},{"class":"Conv2D","name":"conv2d_188","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_6_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_188","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_188"],"params":576},{"class":"Activation","name":"activation_188","activation":"relu","inputs":["batch_normalization_188"],"params":0},{"class":"Conv2D","name":"conv2d_189","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_188"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_189","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_189"],"params":672},{"class":"Activation","name":"activation_189","activation":"relu","inputs":["batch_normalization_189"],"params":0},{"class":"Conv2D","name":"conv2d_187","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_6_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_190","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_189"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_187","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_187"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_190","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_190"],"params":768},{"class":"Activation","name":"activation_187","activation":"relu","inputs":["batch_normalization_187"],"params":0},{"class":"Activation","name":"activation_190","activation":"relu","inputs":["batch_normalization_190"],"params":0},{"class":"Concatenate","name":"block8_7_mixed","axis":3,"inputs":["activation_187","activation_190"],"params":0},{"class":"Conv2D","name":"block8_7_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_7_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_36","scale":0.2,"inputs":["block8_6_ac","block8_7_conv"],"params":0},{"class":"Activation","name":"block8_7_ac","activation":"relu","inputs":["custom_scale_layer_36"],"params":0},{"class":"Conv2D","name":"conv2d_192","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_7_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_192","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_192"],"params":576},{"class":"Activation","name":"activation_192","activation":"relu","inputs":["batch_normalization_192"],"params":0},{"class":"Conv2D","name":"conv2d_193","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_192"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_193","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_193"],"params":672},{"class":"Activation","name":"activation_193","activation":"relu","inputs":["batch_normalization_193"],"params":0},{"class":"Conv2D","name":"conv2d_191","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_7_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_194","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_193"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_191","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_191"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_194","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_194"],"params":768},{"class":"Activation","name":"activation_191","activation":"relu","inputs":["batch_normalization_191"],"params":0},{"class":"Activation","name":"activation_194","activation":"relu","inputs":["batch_normalization_194"],"params":0},{"class":"Concatenate","name":"block8_8_mixed","axis":3,"inputs":["activation_191","activation_194"],"params":0},{"class":"Conv2D","name":"block8_8_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_8_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_37","scale":0.2,"inputs":["block8_7_ac","block8_8_conv"],"params":0},{"class":"Activation","name":"block8_8_ac","activation":"relu","inputs":["custom_scale_layer_37"],"params":0},{"class":"Conv2D","name":"conv2d_196","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_8_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_196","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_196"],"params":576},{"class":"Activation","name":"activation_196","activation":"relu","inputs":["batch_normalization_196"],"params":0},{"class":"Conv2D","name":"conv2d_197","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_196"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_197","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_197"],"params":672},{"class":"Activation","name":"activation_197","activation":"relu","inputs":["batch_normalization_197"],"params":0},{"class":"Conv2D","name":"conv2d_195","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_8_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_198","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_197"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_195","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_195"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_198","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_198"],"params":768},{"class":"Activation","name":"activation_195","activation":"relu","inputs":["batch_normalization_195"],"params":0},{"class":"Activation","name":"activation_198","activation":"relu","inputs":["batch_normalization_198"],"params":0},{"class":"Concatenate","name":"block8_9_mixed","axis":3,"inputs":["activation_195","activation_198"],"params":0},{"class":"Conv2D","name":"block8_9_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_9_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_38","scale":0.2,"inputs":["block8_8_ac","block8_9_conv"],"params":0},{"class":"Activation","name":"block8_9_ac","activation":"relu","inputs":["custom_scale_layer_38"],"params":0},{"class":"Conv2D","name":"conv2d_200","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_9_ac"],"params":399360},{"class":"BatchNormalization","name":"batch_normalization_200","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_200"],"params":576},{"class":"Activation","name":"activation_200","activation":"relu","inputs":["batch_normalization_200"],"params":0},{"class":"Conv2D","name":"conv2d_201","filters":224,"kernel_size":[1,3],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_200"],"params":129024},{"class":"BatchNormalization","name":"batch_normalization_201","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_201"],"params":672},{"class":"Activation","name":"activation_201","activation":"relu","inputs":["batch_normalization_201"],"params":0},{"class":"Conv2D","name":"conv2d_199","filters":192,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["block8_9_ac"],"params":399360},{"class":"Conv2D","name":"conv2d_202","filters":256,"kernel_size":[3,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["activation_201"],"params":172032},{"class":"BatchNormalization","name":"batch_normalization_199","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_199"],"params":576},{"class":"BatchNormalization","name":"batch_normalization_202","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv2d_202"],"params":768},{"class":"Activation","name":"activation_199","activation":"relu","inputs":["batch_normalization_199"],"params":0},{"class":"Activation","name":"activation_202","activation":"relu","inputs":["batch_normalization_202"],"params":0},{"class":"Concatenate","name":"block8_10_mixed","axis":3,"inputs":["activation_199","activation_202"],"params":0},{"class":"Conv2D","name":"block8_10_conv","filters":2080,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":true,"activation":"linear","inputs":["block8_10_mixed"],"params":933920},{"class":"CustomScaleLayer","name":"custom_scale_layer_39","scale":1.0,"inputs":["block8_9_ac","block8_10_conv"],"params":0},{"class":"Conv2D","name":"conv_7b","filters":1536,"kernel_size":[1,1],"strides":[1,1],"padding":"same","use_bias":false,"activation":"linear","inputs":["custom_scale_layer_39"],"params":3194880},{"class":"BatchNormalization","name":"conv_7b_bn","axis":3,"scale":false,"center":true,"epsilon":0.001,"inputs":["conv_7b"],"params":4608},{"class":"Activation","name":"conv_7b_ac","activation":"relu","inputs":["conv_7b_bn"],"params":0}]})fer";

}  // namespace fer::detail
