@problemName fixture
@timeStamps false
@univariate false
@dimensions 9
@classLabel true a b
@data
-1.044594,-0.822624,-0.663866,-0.506411,-0.399276,-0.248663,0.186567,0.560479,0.972653,1.154333,0.977632,0.824326,0.531975,0.289445,0.117236,-0.054246,-0.355192,-0.682712,-1.042484,-1.189174,-1.176941,-0.805280,-0.420973,-0.100186,0.104599,0.304153,0.368942,0.726967,0.991640,1.162208,1.109685,0.755666,0.331224,-0.049833,-0.351585,-0.512789,-0.691706,-0.715340,-0.854457,-0.989286,-0.985472,-0.797992,-0.216596,0.214105,0.455176,0.771914,0.711572,0.724474:-0.453365,0.025832,0.442361,0.615725,0.605035,0.673208,0.762762,0.958540,1.090153,0.962176,0.605473,0.194480,-0.305161,-0.527184,-0.593883,-0.649012,-0.713029,-0.893005,-1.047526,-0.980402,-0.793975,-0.399088,0.167969,0.476094,0.661112,0.610627,0.720091,0.811722,0.927338,0.896896,0.835361,0.531842,0.038553,-0.422500,-0.640066,-0.685952,-0.879361,-0.799861,-0.874191,-0.948944,-0.831500,-0.579728,-0.178659,0.280969,0.637502,0.719370,0.766180,0.821651:-0.268958,-0.419993,-0.570090,-0.888176,-1.005424,-1.129238,-0.833885,-0.376316,0.177212,0.579022,0.651573,0.735641,0.808663,0.791932,0.776033,0.824110,0.521657,0.061554,-0.506007,-0.834798,-1.068419,-0.940741,-0.854980,-0.662128,-0.463533,-0.358020,-0.043202,0.313932,0.692871,1.087737,1.177088,1.078348,0.654447,0.285703,0.073372,-0.073658,-0.260676,-0.585179,-0.853345,-1.009200,-1.122582,-0.932867,-0.436557,0.077507,0.405825,0.578740,0.665357,0.808241:-0.768626,-0.672690,-0.745264,-0.856739,-1.125232,-1.212566,-1.192554,-0.894073,-0.742254,-0.667834,-0.668701,-0.732911,-0.679445,-0.629639,-0.311456,0.016973,0.342641,0.296706,0.207645,0.272434,0.501479,0.655297,0.903648,1.104429,1.026531,0.909661,0.770966,0.939791,1.073932,1.141774,1.135749,0.823199,0.697306,0.446815,0.403062,0.447285,0.419596,0.252260,0.105626,-0.264742,-0.490914,-0.598923,-0.554043,-0.609924,-0.495764,-0.737843,-0.937371,-1.052839:0.699804,0.586243,0.353746,-0.051291,-0.639746,-0.893410,-1.134086,-0.978117,-0.827362,-0.680268,-0.566426,-0.484272,-0.277702,0.031353,0.565437,1.050382,1.245375,1.152766,0.890694,0.555536,0.458937,0.241461,0.072336,-0.216453,-0.579621,-0.982350,-1.182952,-1.199801,-0.908201,-0.424915,-0.235711,-0.038884,0.151689,0.355330,0.551203,0.920143,1.201148,1.169572,0.914068,0.584955,0.074872,-0.171044,-0.365380,-0.392995,-0.744689,-0.917537,-1.109606,-1.077870:-0.842721,-0.283985,0.053714,0.295409,0.517669,0.593333,0.717273,0.968925,0.944300,0.783166,0.399207,-0.144143,-0.545482,-0.894488,-1.003875,-0.881359,-0.787350,-0.719323,-0.517503,-0.325365,0.014397,0.635482,1.000582,1.195960,1.074563,0.792781,0.404806,0.171772,-0.080280,-0.279580,-0.532011,-0.923620,-1.094880,-1.133870,-0.871773,-0.494678,0.168526,0.497333,0.649521,0.692329,0.778922,0.815906,0.796516,0.735637,0.401512,-0.015648,-0.603888,-0.963138:-0.822696,-0.480303,-0.271454,-0.088614,-0.138409,0.006665,0.277026,0.573586,0.888096,1.069591,0.954813,0.840893,0.762085,0.758532,0.783396,0.706621,0.625640,0.373146,-0.032037,-0.392799,-0.605913,-0.565022,-0.631269,-0.747014,-0.918327,-1.013422,-1.168043,-1.019148,-0.836172,-0.460505,-0.317844,-0.199117,-0.022097,0.005048,0.193626,0.565765,0.909647,1.123249,1.018217,0.823268,0.780389,0.777419,0.836333,0.910094,0.721968,0.436723,-0.049568,-0.280894:0.297279,0.591945,0.845432,0.721513,0.692740,0.698599,0.816423,0.956720,1.170288,1.176114,1.060878,0.824968,0.594944,0.598315,0.690537,0.630419,0.568765,0.360201,-0.051387,-0.250364,-0.425758,-0.306437,-0.229398,-0.331744,-0.663686,-0.883530,-1.097337,-1.112923,-0.914904,-0.909163,-0.735575,-0.859612,-0.898691,-0.985602,-0.888788,-0.567298,-0.256680,-0.111174,-0.047626,-0.118785,-0.154584,0.185289,0.474189,0.735247,0.888670,0.931404,0.767071,0.709651:0.569577,0.654287,0.411845,0.272688,-0.155689,-0.449254,-0.449556,-0.508484,-0.546279,-0.577547,-0.718074,-0.952642,-1.191155,-1.134172,-0.959065,-0.840711,-0.696414,-0.743989,-0.840623,-0.825092,-0.620794,-0.316072,-0.030776,0.177760,0.309347,0.249191,0.324231,0.515685,0.762055,1.103608,1.066233,1.094152,0.892884,0.895394,0.901621,0.824642,0.955026,0.977428,0.757609,0.446638,0.150042,0.057634,0.061461,0.018078,-0.047658,-0.471968,-0.640712,-0.956525:a
0.723026,1.127927,1.146267,0.934025,0.491268,0.126192,-0.190774,-0.381066,-0.591759,-0.692503,-0.911559,-1.001729,-0.852551,-0.463799,0.001948,0.539747,0.900355,1.016289,0.868202,0.782628,0.538578,0.420730,0.136333,-0.145354,-0.578270,-1.017177,-1.093085,-1.078451,-0.653681,-0.229895,0.100407,0.388077,0.589761,0.699957,0.842776,0.939227,0.834830,0.653839,0.077461,-0.350207,-0.855066,-1.065094,-1.003545,-0.794891,-0.670615,-0.505924,-0.281632,-0.053897:0.723064,0.812970,0.570046,0.344699,-0.071582,-0.380006,-0.514845,-0.486302,-0.568960,-0.661198,-0.912202,-1.052379,-1.201034,-1.062051,-0.859699,-0.485127,-0.470408,-0.306122,-0.215307,-0.171769,0.056269,0.438910,0.718858,0.982833,1.105361,0.940705,0.749102,0.783113,0.901566,1.024900,0.831319,0.557796,0.268001,-0.050402,-0.287530,-0.377042,-0.436271,-0.525558,-0.849441,-0.975367,-1.211617,-1.131438,-0.874044,-0.676534,-0.637448,-0.492536,-0.471083,-0.473708:0.919242,1.180044,0.901657,0.670745,0.301611,-0.073226,-0.294071,-0.400186,-0.503583,-0.582363,-0.974313,-1.086496,-1.198125,-1.009475,-0.674036,-0.346262,-0.030452,0.211730,0.288066,0.372613,0.744586,1.049514,1.079620,1.191143,1.101546,0.680700,0.326569,0.086176,-0.051378,-0.153947,-0.384258,-0.636718,-1.017187,-1.206367,-1.207538,-0.918065,-0.657112,-0.376112,-0.172689,-0.105258,0.071117,0.361182,0.722642,1.033551,1.158173,1.122092,0.797445,0.678442:-0.840284,-0.436195,-0.026446,0.180343,0.441969,0.518844,0.666959,0.963441,0.989828,0.940173,0.603715,0.066472,-0.499733,-0.760356,-0.731876,-0.797445,-0.798240,-0.749252,-0.633585,-0.493763,-0.160204,0.361119,0.840452,1.043069,1.024567,0.890633,0.590617,0.424128,0.263614,0.174043,-0.292291,-0.651952,-1.020933,-1.172783,-1.048317,-0.791486,-0.375291,-0.037912,0.248816,0.480699,0.610433,0.754761,0.977802,1.060239,0.911801,0.448752,-0.058218,-0.600697:0.754924,0.896538,0.829896,0.537602,0.171922,-0.079577,-0.222841,-0.252760,-0.360114,-0.394495,-0.677736,-0.950931,-1.106854,-1.102483,-0.954864,-0.855583,-0.699675,-0.717015,-0.784601,-0.746573,-0.629946,-0.304306,0.082806,0.196551,0.349459,0.312617,0.371669,0.480853,0.794247,1.079964,1.218319,1.136063,0.895741,0.735159,0.662712,0.772358,0.762179,0.688322,0.466448,0.022767,-0.343410,-0.455173,-0.502150,-0.491559,-0.466574,-0.742659,-1.088801,-1.141958:0.894121,1.111309,1.204801,1.117525,0.953573,0.809055,0.788968,0.878465,0.907334,0.729007,0.570825,0.289389,0.008740,-0.030124,-0.081204,-0.095678,-0.076862,-0.355168,-0.672403,-0.854234,-0.903212,-0.860749,-0.903975,-0.816503,-0.933772,-1.133065,-1.160847,-1.031069,-0.897735,-0.694960,-0.402843,-0.525197,-0.615797,-0.518769,-0.332096,-0.089534,0.285463,0.402194,0.409411,0.420508,0.461165,0.536025,0.832098,1.041858,1.282546,1.034270,0.981588,0.797105:-0.372588,0.054092,0.308937,0.410659,0.472091,0.607488,0.787044,1.058252,1.171103,1.178378,0.965067,0.540351,0.123156,-0.076584,-0.196437,-0.143259,-0.454959,-0.645453,-0.982528,-1.101345,-1.096640,-0.925189,-0.639563,-0.398055,-0.271722,-0.225077,-0.045134,0.328328,0.543842,0.979358,1.084664,1.091291,0.941525,0.711211,0.651105,0.495776,0.553548,0.249527,-0.060410,-0.506606,-0.974122,-1.019882,-0.933297,-0.763401,-0.772110,-0.797749,-0.908559,-0.676239:0.687014,0.536587,0.424112,0.114843,-0.440836,-0.771282,-0.963699,-1.007380,-0.776796,-0.823205,-0.755000,-0.707871,-0.535436,-0.236878,0.209968,0.584576,0.832638,0.967846,0.856600,0.735805,0.708735,0.756824,0.631272,0.432883,0.021957,-0.350507,-0.713909,-0.815753,-0.990157,-0.870265,-0.744632,-0.817765,-0.828961,-0.605506,-0.397052,0.009748,0.443631,0.820279,0.913977,0.790666,0.755069,0.837647,0.881487,0.789359,0.646976,0.256031,-0.327500,-0.641445:0.834529,1.142215,1.173363,0.936566,0.313691,0.124872,-0.366624,-0.431024,-0.529380,-0.683889,-0.905063,-1.097792,-0.958017,-0.734365,-0.352402,0.414158,0.675651,0.899425,0.780885,0.875596,0.886875,0.894536,0.728995,0.397880,-0.000713,-0.607924,-0.975082,-1.048917,-1.043229,-0.825023,-0.648548,-0.421003,-0.321285,-0.156440,0.280245,0.628264,1.019285,1.229181,1.005881,0.757430,0.373047,0.184840,0.078730,-0.222022,-0.432264,-0.819204,-1.126544,-1.244577:b
-0.559263,-0.583416,-0.576744,-0.819806,-0.997285,-1.168033,-1.142381,-0.957113,-0.822950,-0.714751,-0.805809,-0.812296,-0.848897,-0.611238,-0.349205,0.013930,0.227651,0.183026,0.192898,0.223287,0.479894,0.802823,1.017133,1.075995,1.116404,0.827954,0.879790,0.795082,0.805162,1.169468,1.068884,0.724800,0.488723,0.224637,0.131663,0.054274,0.093048,0.032187,-0.240597,-0.509198,-0.805232,-0.769681,-0.864888,-0.737429,-0.862652,-0.968787,-1.019595,-1.222801:-0.017105,0.376438,0.599208,0.666851,0.704628,0.709182,0.767766,0.949330,1.165337,1.143488,1.010551,0.800798,0.452919,0.273324,0.230488,0.150306,-0.017423,-0.327346,-0.652184,-0.920900,-0.953249,-0.948723,-0.838222,-0.865491,-0.803688,-0.966658,-0.905531,-0.777883,-0.420649,-0.164296,0.122362,0.317855,0.148136,0.347846,0.580278,0.813333,1.094368,1.228624,1.052366,0.920949,0.694036,0.650104,0.681966,0.705329,0.578268,0.289556,-0.183358,-0.320342:-0.454599,-0.564220,-0.687550,-0.888997,-1.137347,-0.974475,-0.580103,-0.355329,0.290177,0.630377,0.781620,0.884900,0.739204,0.822055,0.904967,0.737216,0.455264,0.031689,-0.506074,-0.800299,-1.094584,-0.947569,-0.883120,-0.612523,-0.527089,-0.522217,-0.156176,0.165058,0.645811,1.116942,1.127042,1.012048,0.840769,0.436680,0.246349,-0.000598,-0.244873,-0.460632,-0.720964,-1.024483,-1.178856,-1.018566,-0.648421,-0.217487,0.289611,0.422485,0.490532,0.640473:-0.237928,-0.340976,-0.470451,-0.828695,-1.095003,-1.149316,-1.169411,-0.901476,-0.577589,-0.395149,-0.324373,-0.152966,-0.088852,0.140209,0.576102,0.906423,1.025952,1.057670,0.904704,0.675349,0.718014,0.726314,0.686856,0.441666,0.157665,-0.247280,-0.586068,-0.824592,-0.753453,-0.819952,-0.802136,-0.843055,-1.069390,-1.060250,-0.780710,-0.498040,-0.106638,0.204378,0.384610,0.274823,0.439063,0.628747,0.890029,1.109073,1.138188,1.017669,0.656018,0.424278:0.019521,-0.010672,-0.285458,-0.653777,-0.959004,-1.210456,-1.142396,-0.916507,-0.739105,-0.501988,-0.326901,-0.333800,-0.142396,0.095861,0.502751,0.876404,1.198968,1.047267,0.884212,0.720486,0.658530,0.677421,0.586417,0.464721,-0.001196,-0.371612,-0.771688,-0.908280,-0.990822,-0.840242,-0.800442,-0.849064,-0.984635,-0.751918,-0.545023,-0.133474,0.297640,0.592346,0.741778,0.665409,0.697718,0.854649,0.990661,1.038410,0.921079,0.600487,0.227178,-0.080000:-0.957782,-0.827833,-0.611758,-0.648826,-0.598881,-0.414044,-0.048053,0.385556,0.773190,1.031685,0.934096,0.937793,0.699281,0.663731,0.651889,0.536466,0.294556,-0.078700,-0.476589,-0.797486,-0.952181,-0.999599,-0.882648,-0.819774,-0.750955,-0.871277,-0.583281,-0.362245,0.062347,0.549871,0.867917,0.920076,0.911353,0.810612,0.877160,0.929401,0.843991,0.729376,0.290137,-0.170287,-0.604836,-0.781288,-0.769281,-0.850198,-0.770669,-0.870969,-0.946798,-1.007747:-0.494827,-0.409772,-0.598461,-0.646163,-0.964827,-1.059832,-1.204349,-0.951766,-0.854963,-0.759553,-0.932280,-1.051130,-0.960455,-1.004107,-0.755945,-0.479770,-0.369114,-0.248271,-0.269721,-0.369253,-0.249139,0.184833,0.468495,0.618715,0.646422,0.481972,0.508200,0.572947,0.800406,1.134131,1.131080,1.194288,0.916747,0.761419,0.843095,1.003811,1.032453,0.908885,0.789367,0.563236,0.248506,0.151752,0.270139,0.251322,0.094901,-0.109287,-0.430627,-0.609819:-0.602021,-0.791455,-0.772970,-0.846379,-0.904063,-0.736019,-0.451518,0.044577,0.642760,0.871973,0.904139,0.964160,0.712362,0.592648,0.415444,0.233126,-0.080779,-0.481724,-0.879448,-1.275901,-1.113580,-0.952905,-0.573106,-0.141399,0.066965,0.176617,0.549361,0.679526,1.003405,1.140196,1.095108,0.641022,0.212832,-0.343218,-0.557238,-0.781337,-0.794163,-0.710195,-0.834427,-0.833139,-0.551423,-0.262388,0.195746,0.759426,0.958104,1.113981,0.966219,0.661435:-0.979784,-0.731187,-0.354975,-0.251671,0.030628,0.279624,0.610632,0.971591,1.091674,1.120791,0.747186,0.228595,-0.286125,-0.605780,-0.684568,-0.807481,-0.801173,-0.802021,-0.786506,-0.571645,-0.264943,0.226143,0.822343,1.073090,1.131407,0.888378,0.687882,0.441243,0.244868,0.014813,-0.304080,-0.699430,-1.039532,-1.139524,-1.065578,-0.561563,-0.170434,0.295044,0.498156,0.623129,0.833181,0.828138,0.868259,0.853247,0.608680,0.260377,-0.383614,-0.785045:a
0.860743,1.195494,1.159184,1.090231,0.802152,0.462037,0.331423,0.219208,-0.001509,-0.087525,-0.445817,-0.873088,-1.173119,-1.071374,-0.978558,-0.712358,-0.512081,-0.515955,-0.378262,-0.269379,0.052651,0.466269,0.849601,1.114202,1.061272,0.905256,0.746570,0.699353,0.613635,0.559449,0.357977,-0.051069,-0.469111,-0.840270,-0.862669,-0.870691,-0.817914,-0.788578,-0.694349,-0.803586,-0.719039,-0.408296,0.021075,0.505085,0.723586,0.932511,0.764980,0.822783:0.103270,0.013258,-0.149520,-0.465279,-0.939732,-1.138287,-1.218136,-0.984122,-0.771656,-0.614985,-0.555961,-0.489438,-0.364605,-0.002207,0.454885,0.664666,0.978880,0.987031,0.928198,0.750022,0.764043,0.748166,0.809667,0.594923,0.223482,-0.183470,-0.574707,-0.828810,-0.752113,-0.745406,-0.801251,-0.858025,-0.958213,-1.057240,-0.823739,-0.329155,0.070073,0.260743,0.383389,0.465920,0.554091,0.675493,0.988109,1.087699,1.071308,0.947589,0.517136,0.219440:0.944330,0.972947,0.728262,0.443238,-0.121379,-0.645774,-0.835127,-0.849069,-0.809134,-0.694728,-0.705408,-0.755847,-0.549509,-0.238482,0.328520,0.777951,1.172042,1.065223,0.802608,0.672394,0.554256,0.365698,0.216053,-0.057472,-0.440782,-0.887954,-1.190050,-1.116695,-0.961613,-0.631392,-0.377821,-0.139831,0.096417,0.195446,0.578263,0.956630,1.135638,1.168475,0.845984,0.554233,0.130276,-0.210534,-0.482316,-0.574044,-0.640385,-0.816869,-1.053342,-0.994010:0.102609,0.454472,0.561156,0.728111,0.706585,0.584793,0.696641,0.992800,1.122640,1.067622,1.079291,0.803945,0.567116,0.613427,0.528293,0.480815,0.391507,0.049538,-0.287262,-0.510107,-0.680000,-0.664305,-0.527521,-0.630727,-0.815721,-1.047169,-1.170656,-1.064909,-0.932868,-0.603856,-0.599768,-0.543763,-0.624601,-0.517376,-0.262322,0.118172,0.344857,0.585959,0.616245,0.563166,0.550183,0.743675,0.874465,1.156689,1.193160,1.021877,0.770977,0.555742:0.587439,0.944203,1.103393,1.027112,0.930410,0.722199,0.406137,0.308865,0.213381,-0.103625,-0.415374,-0.941017,-1.130572,-1.217596,-0.825111,-0.643735,-0.432577,-0.136006,0.013136,0.319845,0.513954,0.882747,1.172870,1.261068,0.966812,0.652175,0.249617,-0.064681,-0.212997,-0.359697,-0.614651,-0.782588,-1.154761,-1.099022,-0.934159,-0.606490,-0.196936,0.188488,0.434586,0.559889,0.650280,0.858405,0.970294,1.094557,0.874142,0.634177,0.128330,-0.331848:-0.707785,-0.675028,-0.857193,-0.843876,-0.808729,-0.807473,-0.394622,0.124994,0.671114,1.012259,1.110620,0.859174,0.770980,0.448319,0.334917,0.158781,-0.193426,-0.691523,-1.054896,-1.218000,-1.081259,-0.654191,-0.306184,0.191426,0.465331,0.613866,0.728554,0.917230,0.975411,0.966197,0.695316,0.285553,-0.451443,-0.740396,-1.030729,-1.002723,-0.865354,-0.715667,-0.475458,-0.311746,0.019187,0.312184,0.888128,1.142941,1.171452,0.913207,0.484300,0.019305:0.708176,1.007195,1.181350,0.982758,0.673819,0.359578,-0.018334,-0.278071,-0.520495,-0.722871,-0.979987,-1.033458,-1.081939,-0.751244,-0.296390,0.264744,0.723754,0.803165,0.835801,0.764427,0.810068,0.667832,0.516608,0.183084,-0.293459,-0.697843,-0.938892,-1.196591,-0.925115,-0.652586,-0.417757,-0.144343,0.054453,0.272546,0.722555,0.860092,1.172775,1.114075,0.741671,0.292130,-0.143064,-0.505182,-0.651186,-0.704458,-0.902677,-0.799328,-0.765167,-0.661856:0.992546,1.082240,1.004984,0.764753,0.230948,-0.150504,-0.512760,-0.555153,-0.618768,-0.775557,-0.948130,-0.956658,-1.090062,-0.831729,-0.390221,0.174024,0.569429,0.657888,0.662419,0.721978,0.896155,0.916302,1.058772,0.881806,0.431882,-0.020894,-0.435245,-0.640388,-0.843002,-0.725900,-0.823349,-0.911046,-0.906507,-0.814807,-0.539134,-0.104734,0.395368,0.836523,0.980641,0.889961,0.864100,0.774734,0.816049,0.772676,0.466087,0.053435,-0.376362,-0.787064:0.468556,0.454249,0.190894,-0.182474,-0.568816,-0.895043,-1.040161,-0.975185,-0.805029,-0.751626,-0.745483,-0.928447,-0.783827,-0.522145,-0.090318,0.287305,0.565532,0.739520,0.713976,0.666293,0.899053,1.044568,1.064991,1.056682,0.700651,0.409144,-0.005279,-0.247742,-0.318452,-0.411165,-0.520335,-0.778846,-1.053048,-1.222816,-1.307579,-0.869925,-0.663641,-0.322375,-0.156852,-0.124704,-0.014240,0.273926,0.643684,0.948814,1.102983,1.035272,0.961383,0.723987:b
-0.278073,-0.420846,-0.580064,-0.818857,-1.074761,-1.180520,-1.002819,-0.498446,-0.154191,0.198716,0.491304,0.578382,0.660191,0.786081,1.116677,1.110598,0.997966,0.616459,0.088918,-0.332062,-0.515990,-0.631587,-0.712163,-0.838855,-0.980658,-1.017954,-1.009494,-0.605029,-0.137962,0.420018,0.666538,0.746959,0.751889,0.617876,0.802874,0.883654,0.910516,0.673205,0.260443,-0.249826,-0.636080,-0.810584,-0.958816,-0.859462,-0.854374,-0.700089,-0.689834,-0.557827:-0.121151,-0.133655,-0.282672,-0.513018,-0.867603,-1.021574,-1.090940,-1.004967,-0.848000,-0.798768,-0.782657,-0.916523,-0.873442,-0.721569,-0.452822,0.003579,0.131504,0.298053,0.293138,0.249949,0.474202,0.778065,1.016492,1.102396,1.121285,0.894276,0.777546,0.701684,0.789899,0.760957,0.680494,0.430080,0.045893,-0.275856,-0.455083,-0.413681,-0.411123,-0.544554,-0.794362,-0.988412,-1.052734,-1.171487,-0.965771,-0.755047,-0.778221,-0.636476,-0.710176,-0.551545:0.337257,0.721493,0.901824,0.956654,0.807782,0.792924,0.863618,1.007798,0.979226,0.831057,0.569193,0.164915,-0.144574,-0.366730,-0.487579,-0.503131,-0.622279,-0.832763,-1.068498,-1.228467,-1.203917,-0.872204,-0.633748,-0.302790,-0.199005,-0.225691,0.018189,0.289826,0.609600,1.013297,1.188371,1.003114,0.964891,0.795171,0.747774,0.796548,0.695653,0.534437,0.188067,-0.216177,-0.520811,-0.761477,-0.767179,-0.672759,-0.762549,-0.891652,-1.167616,-1.155180:-0.721931,-0.174666,0.182575,0.447667,0.592692,0.742217,0.817669,1.008837,0.952808,0.687757,0.217145,-0.307362,-0.730916,-0.953136,-0.963549,-0.781877,-0.642393,-0.436167,-0.333354,-0.169076,0.396818,0.779716,1.050953,1.182593,0.943783,0.695999,0.188634,-0.245695,-0.351678,-0.557194,-0.619602,-0.964674,-1.145452,-0.952046,-0.640906,-0.128863,0.315613,0.819416,1.025249,0.803723,0.841608,0.647361,0.686369,0.403596,0.035737,-0.361959,-0.847540,-1.183719:-0.950644,-0.724035,-0.810829,-0.823216,-0.738116,-0.652118,-0.269898,0.267805,0.727697,1.030834,1.113133,0.884686,0.733812,0.581521,0.374794,0.267994,-0.092410,-0.412766,-0.864838,-1.149753,-1.222389,-0.920288,-0.627227,-0.247287,-0.073449,0.059630,0.357808,0.646709,0.908455,1.214411,1.125333,0.851780,0.444139,-0.024761,-0.311678,-0.466817,-0.498024,-0.647892,-0.924047,-0.967894,-1.010512,-0.707659,-0.216657,0.250008,0.725451,0.791583,0.748219,0.863140:0.843076,1.119360,0.988061,0.651292,0.212534,-0.156456,-0.497010,-0.553739,-0.690382,-0.769303,-0.859960,-1.031002,-1.104054,-0.784502,-0.401765,0.011264,0.410232,0.540598,0.547161,0.637062,0.916015,0.917114,1.081131,0.978741,0.644721,0.103956,-0.255414,-0.486096,-0.559273,-0.684456,-0.809246,-0.862619,-0.995745,-1.019779,-0.834282,-0.373817,0.056002,0.428761,0.496897,0.630326,0.683896,0.771773,1.003841,1.072415,0.928817,0.633983,0.095906,-0.240351:0.899450,1.080345,1.098614,0.930052,0.498441,0.122628,-0.295593,-0.570651,-0.610380,-0.816814,-0.978202,-0.823789,-0.796512,-0.398743,0.130281,0.714421,0.973861,1.098103,0.859549,0.634937,0.585230,0.417061,0.148233,-0.199461,-0.623609,-1.048077,-1.118053,-1.050784,-0.694271,-0.231724,0.212458,0.454167,0.619828,0.645550,0.866740,1.060191,0.895918,0.657104,0.234726,-0.315831,-0.780595,-1.104088,-0.965429,-0.872643,-0.654037,-0.413839,-0.272862,0.055892:-0.942421,-0.806896,-0.815467,-0.827186,-0.892162,-0.805170,-0.595578,-0.198718,0.207688,0.431001,0.511308,0.524366,0.655408,0.779848,1.041623,1.204622,1.128007,0.975049,0.556326,0.457542,0.237090,0.100927,-0.017918,-0.123913,-0.548869,-0.843991,-1.014631,-1.104034,-1.020970,-0.785792,-0.788555,-0.724166,-0.787595,-0.728948,-0.414950,-0.106935,0.421611,0.554501,0.773451,0.613668,0.719228,0.750474,0.932493,1.144760,1.139254,0.816191,0.607137,0.208482:-0.474633,-0.131786,0.405032,0.557509,0.600611,0.652452,0.751120,0.911192,1.044866,0.828753,0.400751,-0.062608,-0.391720,-0.743792,-0.834803,-0.729927,-0.781632,-0.849331,-0.893407,-0.803468,-0.443409,0.074329,0.560050,0.899279,0.998996,0.912221,0.801102,0.669832,0.566279,0.529454,0.228693,-0.190892,-0.645700,-1.044015,-1.155958,-1.004991,-0.786423,-0.633204,-0.445157,-0.356300,-0.178490,0.231961,0.757758,0.992389,1.235859,1.145591,0.879187,0.460450:a
