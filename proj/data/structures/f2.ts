ts F2
constants 1 0 -1
generators x y z
relations
x^2 = y^2
x^2 z^2 = x^2
y^2 z^2 = x^2
end
