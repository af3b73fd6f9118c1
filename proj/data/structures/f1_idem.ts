ts F1i
constants 1 0 -1
generators x
relations
x^2 = x
end
